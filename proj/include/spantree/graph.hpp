#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spantree {

/// Vertices are 1-indexed throughout the library.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free set of vertices.
class VertexSet {
public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::vector<Vertex> vs);

  /// {1, ..., n}
  static VertexSet range(int n);

  bool contains(Vertex v) const;
  void insert(Vertex v);
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  const std::vector<Vertex>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  /// Membership mask indexed by vertex (index 0 unused).
  std::vector<bool> mask(int n) const;

  VertexSet intersect(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
  std::vector<Vertex> items_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

/// Immutable simple undirected graph on vertices 1..n.
class Graph {
public:
  /// Throws std::invalid_argument on loops, duplicate edges, out-of-range
  /// endpoints or n < 1.
  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const;

  /// |N(v) ∩ w|
  int degree_in(Vertex v, const VertexSet& w) const;
  VertexSet neighborhood(Vertex v) const;
  VertexSet neighborhood_in(Vertex v, const VertexSet& w) const;

  /// Edges {u, v} with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// Optional display labels ("r1", "c2", "a", ...). Empty when absent.
  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;
  std::string label(Vertex v) const;

  VertexSet vertices() const { return VertexSet::range(n_); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  void check_vertex(Vertex v) const;

  int n_;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_; // index 0 unused
  std::vector<bool> matrix_;             // (n+1)^2 adjacency bits
  std::vector<std::string> labels_;
};

/// Result of restricting a graph: the new graph on 1..|w| and, for each new
/// vertex i, origin[i - 1] is the vertex it came from.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> origin;
};

/// Weakly decreasing sequence of positive integers.
class PartitionShape {
public:
  /// Throws std::invalid_argument if parts is empty, not weakly decreasing
  /// or contains a non-positive entry.
  explicit PartitionShape(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int columns() const { return parts_.front(); }
  int size() const;
  int operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const PartitionShape&, const PartitionShape&) = default;

private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const PartitionShape& p);

PartitionShape conjugate(const PartitionShape& shape);

/// Ferrers graph plus its bipartition. Rows r_1..r_m are vertices 1..m,
/// columns c_1..c_n are vertices m+1..m+n.
struct FerrersGraph {
  Graph graph;
  std::vector<Vertex> rows;
  std::vector<Vertex> columns;
};

Graph complete(int n);
/// Parts occupy contiguous vertex ranges in input order.
Graph complete_multipartite(const std::vector<int>& sizes);
FerrersGraph ferrers_graph(const PartitionShape& shape);
Graph edgeless(int n);
Graph path(int n);
Graph cycle(int n);

Subgraph induced_subgraph(const Graph& g, const VertexSet& w);

bool is_connected(const Graph& g);
bool is_independent(const Graph& g, const VertexSet& s);
/// Two-colouring, if one exists: side[v] in {0, 1}, index 0 unused.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Checks the representation invariants (no loops, symmetry, sorted
/// duplicate-free neighbour lists). Returns a description of the first
/// violation.
std::optional<std::string> validate(const Graph& g);

/// Edge-list text format: "n m" header, then m lines "u v" with
/// 1 <= u < v <= n. '#' starts a comment; blank lines are ignored.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);
std::string format_edge_list(const Graph& g);

/// "3,2,2,1" -> (3,2,2,1); also used for multipartite part sizes.
std::vector<int> parse_int_list(std::string_view text);

} // namespace spantree
