#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

enum class Role { initial, isolated, u_dominating };

std::string_view role_name(Role r);

/// A vertex ordering v_1..v_n together with a subset U such that every
/// v_i (i >= 2) has lower neighbourhood either empty (isolated) or equal to
/// U ∩ {v_1..v_{i-1}} (U-dominating). roles[k] describes order[k].
struct ConstructionOrder {
  std::vector<Vertex> order;
  VertexSet u_set;
  std::vector<Role> roles;

  /// D: the U-dominating vertices.
  VertexSet dominating() const;
  VertexSet isolated() const;
  Vertex initial() const { return order.front(); }
};

/// Tags each vertex of `order` by its lower neighbourhood: empty -> isolated,
/// otherwise u_dominating; the first vertex is initial. Does not validate.
ConstructionOrder make_construction_order(const Graph& g, std::vector<Vertex> order, VertexSet u);

/// Returns a description of the first violated construction-order condition.
std::optional<std::string> check_construction_order(const Graph& g, const ConstructionOrder& co);

/// Outcome of the greedy elimination. On failure `stuck` is the remaining
/// vertex set W in which no vertex is isolated or U-dominating.
struct UThresholdResult {
  std::optional<ConstructionOrder> order;
  VertexSet stuck;

  bool ok() const { return order.has_value(); }
};

/// Greedy elimination: repeatedly remove a vertex v of the remaining set W
/// with N_W(v) empty or equal to (W \ {v}) ∩ U. Among removable vertices the
/// highest index is removed first, so ties surface lowest-index-first in the
/// resulting construction order.
UThresholdResult is_u_threshold(const Graph& g, const VertexSet& u);

/// Same elimination with uniformly random tie-breaking.
UThresholdResult is_u_threshold(const Graph& g, const VertexSet& u, std::uint64_t seed);

UThresholdResult is_threshold(const Graph& g);

struct SearchOptions {
  int max_vertices = 24;
  unsigned jobs = 1;
};

struct SpecialThresholdMatch {
  VertexSet u;
  ConstructionOrder order;
};

/// Exhaustive search over U whose complement is an independent set with
/// nested neighbourhoods, smallest complement first, lexicographic within a
/// size. Throws CapabilityExceeded when g has more than max_vertices
/// vertices.
std::optional<SpecialThresholdMatch> find_special_2threshold_u(const Graph& g,
                                                               const SearchOptions& opts = {});

enum class Pattern { two_k2, p4, c4, c5, house, gem, net, diamond_2p, w4_p, octahedron };

std::string_view pattern_name(Pattern p);
Graph pattern_graph(Pattern p);

enum class Family { threshold, special_2threshold, ferrers };

std::string_view family_name(Family f);
const std::vector<Pattern>& forbidden_patterns(Family f);

struct ForbiddenWitness {
  Pattern pattern;
  VertexSet vertices;
};

/// First induced copy of a forbidden pattern for the family, scanning vertex
/// subsets by size then lexicographically. The ferrers family requires a
/// connected bipartite graph (std::invalid_argument otherwise).
std::optional<ForbiddenWitness> forbidden_subgraph_check(const Graph& g, Family family);

/// Canonical ordering of a U-threshold graph: the equivalence classes
/// (same side of U, same deg_U and deg_{U^c}) in increasing ⊴ order, and the
/// construction order obtained by listing each class in increasing index.
struct CanonicalOrder {
  std::vector<VertexSet> classes;
  ConstructionOrder order;
};

CanonicalOrder canonical_order(const Graph& g, const VertexSet& u);

/// Ferrers structure with rows and columns sorted by decreasing degree
/// (ties by vertex index), so row r_i is adjacent to exactly c_1..c_{λ_i}.
struct FerrersStructure {
  int vertex_count = 0;
  std::vector<Vertex> rows;
  std::vector<Vertex> columns;
  PartitionShape shape{std::vector<int>{1}};
  std::vector<Vertex> traversal;
};

/// Recognises connected bipartite graphs whose side neighbourhoods are
/// nested. By default the side containing vertex 1 is taken as the columns;
/// pass `row_vertex` to name a vertex on the row side instead.
std::optional<FerrersStructure> ferrers_recognize(const Graph& g,
                                                  std::optional<Vertex> row_vertex = {});

/// Structure of ferrers_graph(shape) without running recognition.
FerrersStructure ferrers_structure(const PartitionShape& shape);

/// Traversal order with U = C; rows are U-dominating, later columns isolated.
ConstructionOrder construction_order(const FerrersStructure& fs);

struct NestingClause {
  bool holds = true;
  std::optional<std::pair<Vertex, Vertex>> counterexample;
  std::string detail;
};

struct NestingReport {
  NestingClause complement_independent;   // U^c independent
  NestingClause complement_nested;        // N(x) nested for x in U^c
  NestingClause restricted_nested;        // N_{U^c}(x) nested for x in U
  NestingClause monotone_along_threshold; // v ≺ w in G[U] => N_{U^c}(v) ⊇ N_{U^c}(w)

  bool all_hold() const {
    return complement_independent.holds && complement_nested.holds && restricted_nested.holds &&
           monotone_along_threshold.holds;
  }
};

NestingReport nesting_report(const Graph& g, const VertexSet& u);

/// Rank of each vertex class of a threshold graph in its construction order
/// (index 0 unused). Equal ranks mean equal degree. Throws
/// std::invalid_argument if g is not threshold and ExactnessError if a degree
/// class is not contiguous in the construction order.
std::vector<int> threshold_class_rank(const Graph& g);

/// Everything the CLI reports about a graph.
struct Classification {
  std::optional<ConstructionOrder> threshold;
  std::optional<FerrersStructure> ferrers;
  std::optional<SpecialThresholdMatch> special;
  bool special_search_exceeded = false;
  std::optional<ForbiddenWitness> threshold_witness;
  std::optional<ForbiddenWitness> special_witness;
};

Classification classify(const Graph& g, const SearchOptions& opts = {});

} // namespace spantree
