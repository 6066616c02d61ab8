#include "spantree/graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <queue>
#include <stdexcept>

namespace spantree {

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}

VertexSet::VertexSet(std::vector<Vertex> vs) : items_(std::move(vs)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet VertexSet::range(int n) {
  std::vector<Vertex> vs(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(vs.begin(), vs.end(), 1);
  VertexSet s;
  s.items_ = std::move(vs);
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it == items_.end() || *it != v) items_.insert(it, v);
}

std::vector<bool> VertexSet::mask(int n) const {
  std::vector<bool> m(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : items_) {
    if (v >= 1 && v <= n) m[v] = true;
  }
  return m;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                        std::back_inserter(out.items_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                      std::back_inserter(out.items_));
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (Vertex v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

Graph::Graph(int n, const std::vector<Edge>& edges)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)) + 1) {
  if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
  const auto side = static_cast<std::size_t>(n) + 1;
  matrix_.assign(side * side, false);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    if (matrix_[u * side + v])
      throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    matrix_[u * side + v] = true;
    matrix_[v * side + u] = true;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return matrix_[static_cast<std::size_t>(u) * (n_ + 1) + v];
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::degree_in(Vertex v, const VertexSet& w) const {
  int d = 0;
  for (Vertex x : neighbors(v)) d += w.contains(x) ? 1 : 0;
  return d;
}

VertexSet Graph::neighborhood(Vertex v) const { return VertexSet(neighbors(v)); }

VertexSet Graph::neighborhood_in(Vertex v, const VertexSet& w) const {
  return neighborhood(v).intersect(w);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("label count does not match vertex count");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

std::string Graph::label(Vertex v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v - 1];
}

PartitionShape::PartitionShape(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must have at least one part");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int PartitionShape::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::ostream& operator<<(std::ostream& os, const PartitionShape& p) {
  os << '(';
  for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

PartitionShape conjugate(const PartitionShape& shape) {
  std::vector<int> out(static_cast<std::size_t>(shape.columns()), 0);
  for (int part : shape.parts())
    for (int j = 0; j < part; ++j) ++out[j];
  return PartitionShape(std::move(out));
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complete_multipartite(const std::vector<int>& sizes) {
  if (sizes.empty()) throw std::invalid_argument("multipartite graph needs at least one part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    if (sizes[p] < 1) throw std::invalid_argument("part sizes must be positive");
    part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (part_of[u - 1] != part_of[v - 1]) edges.emplace_back(u, v);
  return Graph(n, edges);
}

FerrersGraph ferrers_graph(const PartitionShape& shape) {
  const int m = shape.rows();
  const int cols = shape.columns();
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  FerrersGraph out{Graph(1, {}), {}, {}};
  for (int i = 1; i <= m; ++i) {
    out.rows.push_back(i);
    labels.push_back("r" + std::to_string(i));
    for (int j = 1; j <= shape[i - 1]; ++j) edges.emplace_back(i, m + j);
  }
  for (int j = 1; j <= cols; ++j) {
    out.columns.push_back(m + j);
    labels.push_back("c" + std::to_string(j));
  }
  out.graph = Graph(m + cols, edges).with_labels(std::move(labels));
  return out;
}

Graph edgeless(int n) { return Graph(n, {}); }

Graph path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, n);
  return Graph(n, edges);
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& w) {
  if (w.empty()) throw std::invalid_argument("induced subgraph on an empty vertex set");
  std::vector<int> index(static_cast<std::size_t>(g.order()) + 1, 0);
  std::vector<Vertex> origin;
  for (Vertex v : w) {
    if (v < 1 || v > g.order())
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    origin.push_back(v);
    index[v] = static_cast<int>(origin.size());
  }
  std::vector<Edge> edges;
  for (Vertex v : origin)
    for (Vertex x : g.neighbors(v))
      if (v < x && index[x] != 0) edges.emplace_back(index[v], index[x]);
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (Vertex v : origin) labels.push_back(g.label(v));
  return {Graph(static_cast<int>(origin.size()), edges).with_labels(std::move(labels)),
          std::move(origin)};
}

bool is_connected(const Graph& g) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()) + 1, false);
  std::queue<Vertex> todo;
  todo.push(1);
  seen[1] = true;
  int reached = 1;
  while (!todo.empty()) {
    Vertex v = todo.front();
    todo.pop();
    for (Vertex x : g.neighbors(v)) {
      if (!seen[x]) {
        seen[x] = true;
        ++reached;
        todo.push(x);
      }
    }
  }
  return reached == g.order();
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    for (Vertex x : g.neighbors(v))
      if (s.contains(x)) return false;
  }
  return true;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.order()) + 1, -1);
  side[0] = 0;
  for (Vertex start = 1; start <= g.order(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::queue<Vertex> todo;
    todo.push(start);
    while (!todo.empty()) {
      Vertex v = todo.front();
      todo.pop();
      for (Vertex x : g.neighbors(v)) {
        if (side[x] == -1) {
          side[x] = 1 - side[v];
          todo.push(x);
        } else if (side[x] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::optional<std::string> validate(const Graph& g) {
  std::size_t endpoint_total = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    const auto& nb = g.neighbors(v);
    endpoint_total += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == v) return "loop at " + std::to_string(v);
      if (nb[i] < 1 || nb[i] > g.order()) return "neighbour out of range at " + std::to_string(v);
      if (i > 0 && nb[i] <= nb[i - 1]) return "unsorted or repeated neighbours at " + std::to_string(v);
      const auto& back = g.neighbors(nb[i]);
      if (!std::binary_search(back.begin(), back.end(), v))
        return "asymmetric adjacency " + std::to_string(v) + "-" + std::to_string(nb[i]);
      if (!g.adjacent(v, nb[i])) return "adjacency matrix disagrees with lists";
    }
  }
  if (endpoint_total != 2 * g.edge_count()) return "edge count mismatch";
  return std::nullopt;
}

} // namespace spantree
