#include "spantree/weighted.hpp"

#include <stdexcept>

#include "spantree/errors.hpp"

namespace spantree {
namespace {

MultiPoly x(const Graph& g, Vertex v) { return MultiPoly::variable(g.order(), v); }

MultiPoly neighbour_sum(const Graph& g, Vertex v) {
  return variable_sum(g.order(), g.neighbors(v));
}

MultiPoly all_variables_product(int n) {
  MultiPoly p(n, 1);
  for (int v = 1; v <= n; ++v) p *= MultiPoly::variable(n, v);
  return p;
}

MultiPoly poly_sum(const PolyVector& v, int nvars) {
  MultiPoly s(nvars);
  for (const auto& p : v) s += p;
  return s;
}

void require_order(const Graph& g, const ConstructionOrder& co) {
  if (auto err = check_construction_order(g, co))
    throw std::invalid_argument("invalid construction order: " + *err);
}

} // namespace

MultiPoly weighted_degree(const Graph& g, Vertex v) { return x(g, v) * neighbour_sum(g, v); }

WeightedLaplacian weighted_laplacian(const Graph& g) { return weighted_laplacian(g, g.vertices().items()); }

WeightedLaplacian weighted_laplacian(const Graph& g, const std::vector<Vertex>& order) {
  const auto n = static_cast<std::size_t>(g.order());
  if (order.size() != n || !(VertexSet(order) == g.vertices()))
    throw std::invalid_argument("ordering is not a permutation of the vertices");
  WeightedLaplacian m(n, n, MultiPoly(g.order()));
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = weighted_degree(g, order[i]);
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.adjacent(order[i], order[j])) m(i, j) = -(x(g, order[i]) * x(g, order[j]));
  }
  return m;
}

bool is_upper_triangular(const PolyMatrix& m) {
  for (std::size_t r = 1; r < m.rows(); ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

MultiPoly determinant(const PolyMatrix& m, int nvars) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  const MultiPoly one(nvars, 1);
  if (is_upper_triangular(m)) {
    MultiPoly p = one;
    for (const auto& d : m.diagonal()) p *= d;
    return p;
  }
  return bareiss_determinant(m, one, [](const MultiPoly& a, const MultiPoly& b) { return exact_divide(a, b); });
}

MultiPoly expansion_determinant(const PolyMatrix& m, int nvars) {
  return expansion_determinant(m, MultiPoly(nvars, 1));
}

PolyMatrix rank_one_update(const PolyMatrix& m, const PolyVector& a, const PolyVector& b) {
  return rank_one_update<MultiPoly>(m, a, b);
}

MultiPoly weighted_oracle(const Graph& g, const OracleOptions& opts) {
  const int n = g.order();
  MultiPoly total(n);
  for (const auto& tree : oracle_trees(g, opts)) {
    Exponents e(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : tree) {
      ++e[u - 1];
      ++e[v - 1];
    }
    total += MultiPoly::monomial(e, 1);
  }
  return total;
}

MultiPoly weighted_matrix_tree(const Graph& g) {
  if (g.order() == 1) return MultiPoly(1, 1);
  return determinant(weighted_laplacian(g).without(0, 0), g.order());
}

MultiPoly weighted_perturbation_count(const Graph& g, const PolyVector& a, const PolyVector& b) {
  const int n = g.order();
  const MultiPoly sa = poly_sum(a, n);
  const MultiPoly sb = poly_sum(b, n);
  if (sa.is_zero() || sb.is_zero()) throw std::invalid_argument("perturbation vectors must have nonzero sums");
  return exact_divide(determinant(rank_one_update(weighted_laplacian(g), a, b), n), sa * sb);
}

MultiPoly WeightedPerturbation::diagonal_product() const {
  const int n = static_cast<int>(order.size());
  MultiPoly p(n, 1);
  for (const auto& d : matrix.diagonal()) p *= d;
  return p;
}

MultiPoly WeightedPerturbation::count() const {
  const int n = static_cast<int>(order.size());
  const MultiPoly det = is_upper_triangular(matrix) ? diagonal_product() : determinant(matrix, n);
  return exact_divide(det, poly_sum(a, n) * poly_sum(b, n));
}

WeightedPerturbation weighted_build_perturbation(const Graph& g, const ConstructionOrder& co) {
  require_order(g, co);
  const int n = g.order();
  const VertexSet d = co.dominating();
  WeightedPerturbation p;
  p.order = co.order;
  for (Vertex v : co.order) {
    p.a.push_back(d.contains(v) ? x(g, v) : MultiPoly(n));
    p.b.push_back(co.u_set.contains(v) ? x(g, v) : MultiPoly(n));
  }
  p.matrix = rank_one_update(weighted_laplacian(g, co.order), p.a, p.b);
  if (!is_upper_triangular(p.matrix))
    throw ExactnessError("weighted L + ab^T is not upper triangular for this construction order");
  return p;
}

MultiPoly weighted_cayley_prufer(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  if (n == 1) return MultiPoly(1, 1);
  const MultiPoly product = all_variables_product(n);
  if (n == 2) return product;
  std::vector<Vertex> all(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) all[v - 1] = v;
  return product * pow(variable_sum(n, all), static_cast<unsigned>(n - 2));
}

MultiPoly weighted_count_threshold(const Graph& g, const ConstructionOrder& co) {
  require_order(g, co);
  if (!(co.u_set == g.vertices())) throw std::invalid_argument("threshold count needs U = V");
  const int n = g.order();
  MultiPoly numerator = all_variables_product(n);
  for (Vertex v : co.dominating()) numerator *= x(g, v) + neighbour_sum(g, v);
  for (Vertex v : co.isolated()) numerator *= neighbour_sum(g, v);
  return exact_divide(numerator, variable_sum(n, g.vertices().items()));
}

MultiPoly weighted_count_ferrers(const FerrersStructure& fs) {
  const int n = fs.vertex_count;
  const PartitionShape conj = conjugate(fs.shape);
  MultiPoly result = all_variables_product(n);
  auto prefix = [&](const std::vector<Vertex>& side, int length) {
    return variable_sum(n, std::vector<Vertex>(side.begin(), side.begin() + length));
  };
  for (std::size_t i = 1; i < fs.rows.size(); ++i) result *= prefix(fs.columns, fs.shape[i]);
  for (std::size_t j = 1; j < fs.columns.size(); ++j) result *= prefix(fs.rows, conj[j]);
  return result;
}

MultiPoly weighted_count_special_2threshold(const Graph& g, const ConstructionOrder& co) {
  require_order(g, co);
  const VertexSet d = co.dominating();
  if (d.empty() || co.u_set.empty())
    throw std::invalid_argument("special 2-threshold formula needs nonempty D and U");
  const int n = g.order();
  const VertexSet du = d.intersect(co.u_set);
  MultiPoly numerator = all_variables_product(n);
  for (Vertex v = 1; v <= n; ++v)
    numerator *= du.contains(v) ? x(g, v) + neighbour_sum(g, v) : neighbour_sum(g, v);
  return exact_divide(numerator, variable_sum(n, d.items()) * variable_sum(n, co.u_set.items()));
}

} // namespace spantree
