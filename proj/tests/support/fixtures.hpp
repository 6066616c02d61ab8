#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "spantree/exact_linalg.hpp"
#include "spantree/graph.hpp"
#include "spantree/multipoly.hpp"
#include "spantree/recognition.hpp"

namespace fixtures {

using namespace spantree;

inline Graph fig1a() { return Graph(6, {{1, 2}, {1, 4}, {2, 3}, {2, 5}, {2, 6}, {4, 5}, {5, 6}}); }
inline Graph fig1d() { return Graph(5, {{3, 4}, {4, 5}, {2, 5}, {1, 2}, {1, 4}, {2, 4}}); }
inline Graph fig1e() { return Graph(5, {{3, 4}, {1, 2}, {2, 5}, {4, 5}, {1, 4}, {1, 5}}); }
inline Graph fig1f() { return Graph(7, {{1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 4}, {2, 5}, {2, 6}, {3, 4}}); }
inline const VertexSet fig1e_u{1, 3, 5};

// a..h are 1..8
inline Graph fig8() {
  return Graph(8, {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {4, 5}, {3, 8}, {4, 8}, {5, 8}, {6, 8}, {4, 7}, {5, 7}});
}
inline const VertexSet fig8_u{1, 2, 3, 4, 5, 6};

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// The labelled graph on n vertices whose edges are the set bits of `mask`
/// over pairs (u, v), u < v, in lexicographic order.
inline Graph graph_from_mask(int n, unsigned long mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v, ++bit)
      if (mask >> bit & 1ul) edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Builds a U-threshold graph from a random construction order: each vertex
/// after the first is isolated or U-dominating at random, and joins U at
/// random.
struct Constructed {
  Graph graph;
  VertexSet u;
  std::vector<Vertex> order;
};

inline Constructed random_u_threshold(std::mt19937_64& rng, int n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::bernoulli_distribution coin(0.5);
  std::vector<Vertex> u;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && coin(rng))
      for (int j = 0; j < i; ++j)
        if (std::find(u.begin(), u.end(), order[j]) != u.end())
          edges.emplace_back(std::min(order[i], order[j]), std::max(order[i], order[j]));
    if (coin(rng)) u.push_back(order[i]);
  }
  return {Graph(n, edges), VertexSet(u), order};
}

/// Random threshold graph: U = V in the construction above.
inline Graph random_threshold(std::mt19937_64& rng, int n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<Edge> edges;
  for (int v = 2; v <= n; ++v)
    if (coin(rng))
      for (int w = 1; w < v; ++w) edges.emplace_back(w, v);
  return Graph(n, edges);
}

inline std::vector<int> random_partition(std::mt19937_64& rng, int total) {
  std::vector<int> parts;
  while (total > 0) {
    const int p = std::uniform_int_distribution<int>(1, total)(rng);
    parts.push_back(p);
    total -= p;
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

/// Leibniz formula over all permutations.
template <class T>
T leibniz_determinant(const Matrix<T>& m, const T& one) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  T total = one - one;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    T term = one;
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2)
      total = total - term;
    else
      total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Spanning trees by deletion-contraction on a multigraph edge list.
inline BigInt deletion_contraction(int n, std::vector<Edge> edges) {
  if (n == 1) return 1;
  edges.erase(std::remove_if(edges.begin(), edges.end(), [](Edge e) { return e.first == e.second; }), edges.end());
  if (edges.empty()) return 0;
  const Edge e = edges.back();
  edges.pop_back();
  BigInt without = deletion_contraction(n, edges);
  // contract e.second into e.first, then relabel vertex n to e.second
  std::vector<Edge> contracted;
  for (auto [a, b] : edges) {
    auto map = [&](int v) {
      if (v == e.second) v = e.first;
      if (v == n) v = e.second;
      return v;
    };
    contracted.emplace_back(map(a), map(b));
  }
  return without + deletion_contraction(n - 1, contracted);
}

inline std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

} // namespace fixtures
