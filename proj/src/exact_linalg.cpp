#include "spantree/exact_linalg.hpp"

#include <stdexcept>

#include "spantree/errors.hpp"

namespace spantree {

BigInt exact_divide(const BigInt& a, const BigInt& b) {
  if (b == 0) throw std::domain_error("division by zero");
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw ExactnessError("inexact integer division: " + a.str() + " / " + b.str());
  return q;
}

ExactMatrix laplacian(const Graph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.order()));
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<Vertex>(k + 1);
  return laplacian(g, order);
}

ExactMatrix laplacian(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = order.size();
  if (n != static_cast<std::size_t>(g.order()) || !(VertexSet(order) == g.vertices()))
    throw std::invalid_argument("ordering must list every vertex exactly once");
  ExactMatrix l(n, n, BigInt(0));
  for (std::size_t r = 0; r < n; ++r) {
    l(r, r) = g.degree(order[r]);
    for (std::size_t c = 0; c < n; ++c)
      if (c != r && g.adjacent(order[r], order[c])) l(r, c) = -1;
  }
  return l;
}

ExactMatrix rank_one_update(const ExactMatrix& m, const IntVector& a, const IntVector& b) {
  return rank_one_update<BigInt>(m, a, b);
}

BigInt determinant(const ExactMatrix& m) {
  return bareiss_determinant(m, BigInt(1),
                             [](const BigInt& x, const BigInt& y) { return exact_divide(x, y); });
}

BigInt minor_determinant(const ExactMatrix& m, std::size_t row, std::size_t col) {
  if (!m.square()) throw std::invalid_argument("minor of a non-square matrix");
  return determinant(m.without(row, col));
}

bool is_upper_triangular(const ExactMatrix& m) { return is_upper_triangular(m, BigInt(0)); }

BigInt sum(const IntVector& v) {
  BigInt total = 0;
  for (const auto& x : v) total += x;
  return total;
}

IntVector indicator(const std::vector<Vertex>& order, const VertexSet& s) {
  IntVector out;
  out.reserve(order.size());
  for (Vertex v : order) out.emplace_back(s.contains(v) ? 1 : 0);
  return out;
}

} // namespace spantree
