#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#include "spantree/recognition.hpp"

namespace spantree {
namespace {

struct PatternSpec {
  Pattern pattern;
  std::string_view name;
  int order;
  std::vector<Edge> edges; // 0-based
};

const std::vector<PatternSpec>& library() {
  static const std::vector<PatternSpec> specs = {
      {Pattern::two_k2, "2K2", 4, {{0, 1}, {2, 3}}},
      {Pattern::p4, "P4", 4, {{0, 1}, {1, 2}, {2, 3}}},
      {Pattern::c4, "C4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},
      {Pattern::c5, "C5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}},
      // square 1-2-3-4 with roof vertex 0 on 1 and 4
      {Pattern::house, "House", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 4}}},
      // path 1-2-3-4 plus a vertex 0 adjacent to all of it
      {Pattern::gem, "Gem", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 2}, {0, 3}}},
      // triangle 1-2-5 with pendants 0, 3, 4
      {Pattern::net, "Net", 6, {{1, 2}, {2, 5}, {1, 5}, {0, 1}, {2, 3}, {4, 5}}},
      // diamond on 2,3,4,5 (4,5 non-adjacent) with pendants 0 on 2 and 1 on 3
      {Pattern::diamond_2p, "Diamond+2P", 6,
       {{2, 3}, {2, 4}, {3, 4}, {2, 5}, {3, 5}, {0, 2}, {1, 3}}},
      // 4-cycle 0-1-2-3, hub 4, pendant 5 on the hub
      {Pattern::w4_p, "W4+P", 6,
       {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}, {4, 5}}},
      // K_{2,2,2}: non-edges 0-1, 2-3, 4-5
      {Pattern::octahedron, "Octahedron", 6,
       {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}},
  };
  return specs;
}

const PatternSpec& spec_of(Pattern p) {
  for (const auto& s : library())
    if (s.pattern == p) return s;
  throw std::invalid_argument("unknown pattern");
}

constexpr int kMaxPattern = 6;

// Adjacency of up to 6 vertices as a 36-bit row-major mask.
using Bits = std::uint64_t;

Bits bit(int i, int j) { return Bits{1} << (i * kMaxPattern + j); }

struct Shape {
  int order = 0;
  Bits adj = 0;
  int edges = 0;
  std::array<int, kMaxPattern> degrees{};
};

Shape shape_of(int order, const std::vector<Edge>& edges) {
  Shape s;
  s.order = order;
  for (auto [a, b] : edges) {
    s.adj |= bit(a, b) | bit(b, a);
    ++s.degrees[a];
    ++s.degrees[b];
    ++s.edges;
  }
  std::sort(s.degrees.begin(), s.degrees.begin() + order);
  return s;
}

bool isomorphic(const Shape& host, const Shape& pattern) {
  if (host.order != pattern.order || host.edges != pattern.edges || host.degrees != pattern.degrees)
    return false;
  std::array<int, kMaxPattern> perm{};
  for (int i = 0; i < host.order; ++i) perm[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i < host.order && ok; ++i)
      for (int j = i + 1; j < host.order && ok; ++j)
        ok = static_cast<bool>(host.adj & bit(perm[i], perm[j])) ==
             static_cast<bool>(pattern.adj & bit(i, j));
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.begin() + host.order));
  return false;
}

} // namespace

std::string_view pattern_name(Pattern p) { return spec_of(p).name; }

Graph pattern_graph(Pattern p) {
  const auto& s = spec_of(p);
  std::vector<Edge> edges;
  for (auto [a, b] : s.edges) edges.emplace_back(a + 1, b + 1);
  return Graph(s.order, edges);
}

std::string_view family_name(Family f) {
  switch (f) {
  case Family::threshold: return "threshold";
  case Family::special_2threshold: return "special-2-threshold";
  case Family::ferrers: return "ferrers";
  }
  return "?";
}

const std::vector<Pattern>& forbidden_patterns(Family f) {
  static const std::vector<Pattern> threshold = {Pattern::two_k2, Pattern::p4, Pattern::c4};
  static const std::vector<Pattern> special = {Pattern::two_k2, Pattern::c5,         Pattern::house,
                                               Pattern::gem,    Pattern::net,        Pattern::diamond_2p,
                                               Pattern::w4_p,   Pattern::octahedron};
  static const std::vector<Pattern> ferrers = {Pattern::two_k2};
  switch (f) {
  case Family::threshold: return threshold;
  case Family::special_2threshold: return special;
  case Family::ferrers: return ferrers;
  }
  throw std::invalid_argument("unknown family");
}

std::optional<ForbiddenWitness> forbidden_subgraph_check(const Graph& g, Family family) {
  if (family == Family::ferrers && (!is_connected(g) || !bipartition(g)))
    throw std::invalid_argument("Ferrers forbidden-subgraph test needs a connected bipartite graph");

  std::vector<std::pair<Pattern, Shape>> patterns;
  int min_size = kMaxPattern;
  int max_size = 0;
  for (Pattern p : forbidden_patterns(family)) {
    const auto& s = spec_of(p);
    patterns.emplace_back(p, shape_of(s.order, s.edges));
    min_size = std::min(min_size, s.order);
    max_size = std::max(max_size, s.order);
  }

  const int n = g.order();
  for (int k = min_size; k <= std::min(max_size, n); ++k) {
    std::vector<Vertex> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i + 1;
    while (true) {
      std::vector<Edge> local;
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (g.adjacent(pick[i], pick[j])) local.emplace_back(i, j);
      const Shape host = shape_of(k, local);
      for (const auto& [p, shape] : patterns)
        if (isomorphic(host, shape)) return ForbiddenWitness{p, VertexSet(pick)};

      // next k-combination of 1..n in lexicographic order
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i + 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

} // namespace spantree
