#include "spantree/tree_count.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "spantree/errors.hpp"

namespace spantree {

BigInt matrix_tree_count(const Graph& g) {
  if (g.order() == 1) return 1;
  return minor_determinant(laplacian(g), 0, 0);
}

BigInt perturbation_count(const Graph& g, const IntVector& a, const IntVector& b) {
  const BigInt sa = sum(a);
  const BigInt sb = sum(b);
  if (sa == 0 || sb == 0) throw std::invalid_argument("perturbation vectors must have nonzero sums");
  return exact_divide(determinant(rank_one_update(laplacian(g), a, b)), sa * sb);
}

BigInt Perturbation::diagonal_product() const {
  BigInt p = 1;
  for (const auto& d : matrix.diagonal()) p *= d;
  return p;
}

BigInt Perturbation::count() const {
  if (!lemma_applicable) throw std::invalid_argument("perturbation vectors have a zero sum");
  const BigInt det = is_upper_triangular(matrix) ? diagonal_product() : determinant(matrix);
  return exact_divide(det, sum(a) * sum(b));
}

Perturbation build_perturbation(const Graph& g, const ConstructionOrder& co) {
  if (auto err = check_construction_order(g, co))
    throw std::invalid_argument("invalid construction order: " + *err);
  Perturbation p;
  p.order = co.order;
  p.a = indicator(co.order, co.dominating());
  p.b = indicator(co.order, co.u_set);
  p.matrix = rank_one_update(laplacian(g, co.order), p.a, p.b);
  p.lemma_applicable = sum(p.a) != 0 && sum(p.b) != 0;
  if (!is_upper_triangular(p.matrix))
    throw ExactnessError("L + ab^T is not upper triangular for this construction order");
  return p;
}

std::optional<Perturbation> search_triangular_perturbation(const Graph& g, int max_vertices) {
  const int n = g.order();
  if (n > max_vertices)
    throw CapabilityExceeded("permutation search is limited to " + std::to_string(max_vertices) +
                             " vertices");
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::uint32_t> lower(static_cast<std::size_t>(n));
  do {
    // lower[i]: positions j < i adjacent to position i
    std::uint32_t support = 0;
    for (int i = 0; i < n; ++i) {
      lower[i] = 0;
      for (int j = 0; j < i; ++j)
        if (g.adjacent(perm[i], perm[j])) lower[i] |= 1u << j;
      support |= lower[i];
    }
    bool rank_one = true;
    for (int i = 0; i < n && rank_one; ++i)
      rank_one = lower[i] == 0 || lower[i] == (support & ((1u << i) - 1));
    if (!rank_one) continue;

    Perturbation p;
    p.order = perm;
    for (int i = 0; i < n; ++i) {
      p.a.emplace_back(lower[i] != 0 ? 1 : 0);
      p.b.emplace_back((support >> i) & 1u);
    }
    if (support == 0) {
      // No lower entries at all: any perturbation confined to row 1 works.
      p.a[0] = 1;
      p.b[0] = 1;
    }
    p.matrix = rank_one_update(laplacian(g, perm), p.a, p.b);
    p.lemma_applicable = true;
    if (!is_upper_triangular(p.matrix))
      throw ExactnessError("rank-one pattern search produced a non-triangular matrix");
    return p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

BigInt count_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  if (n <= 2) return 1;
  return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(n - 2));
}

BigInt count_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("bipartite part sizes must be positive");
  return boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(n - 1)) *
         boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(m - 1));
}

BigInt count_multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("multipartite graph needs at least one part");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("part sizes must be positive");
  const int n = std::accumulate(sizes.begin(), sizes.end(), 0);
  const auto k = static_cast<unsigned>(sizes.size());
  if (k == 1) return n == 1 ? 1 : 0;
  BigInt total = boost::multiprecision::pow(BigInt(n), k - 2);
  for (int s : sizes) total *= boost::multiprecision::pow(BigInt(n - s), static_cast<unsigned>(s - 1));
  return total;
}

namespace {

void require_order(const Graph& g, const ConstructionOrder& co) {
  if (auto err = check_construction_order(g, co))
    throw std::invalid_argument("invalid construction order: " + *err);
}

} // namespace

BigInt count_threshold(const Graph& g, const ConstructionOrder& co) {
  require_order(g, co);
  if (!(co.u_set == g.vertices())) throw std::invalid_argument("threshold count needs U = V");
  BigInt numerator = 1;
  for (Vertex v : co.dominating()) numerator *= g.degree(v) + 1;
  for (Vertex v : co.isolated()) numerator *= g.degree(v);
  return exact_divide(numerator, g.order());
}

BigInt count_ferrers(const FerrersStructure& fs) {
  const PartitionShape columns = conjugate(fs.shape);
  BigInt numerator = 1;
  for (int d : fs.shape.parts()) numerator *= d;
  for (int d : columns.parts()) numerator *= d;
  return exact_divide(numerator, BigInt(fs.shape.rows()) * fs.shape.columns());
}

BigInt count_special_2threshold(const Graph& g, const ConstructionOrder& co) {
  require_order(g, co);
  const VertexSet d = co.dominating();
  if (d.empty() || co.u_set.empty())
    throw std::invalid_argument("special 2-threshold formula needs nonempty D and U");
  const VertexSet du = d.intersect(co.u_set);
  BigInt numerator = 1;
  for (Vertex v = 1; v <= g.order(); ++v) numerator *= g.degree(v) + (du.contains(v) ? 1 : 0);
  return exact_divide(numerator, BigInt(d.size()) * co.u_set.size());
}

} // namespace spantree
