#include "spantree/recognition.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "spantree/errors.hpp"

namespace spantree {

std::string_view role_name(Role r) {
  switch (r) {
  case Role::initial: return "initial";
  case Role::isolated: return "isolated";
  case Role::u_dominating: return "u_dominating";
  }
  return "?";
}

VertexSet ConstructionOrder::dominating() const {
  std::vector<Vertex> out;
  for (std::size_t k = 0; k < order.size(); ++k)
    if (roles[k] == Role::u_dominating) out.push_back(order[k]);
  return VertexSet(std::move(out));
}

VertexSet ConstructionOrder::isolated() const {
  std::vector<Vertex> out;
  for (std::size_t k = 0; k < order.size(); ++k)
    if (roles[k] == Role::isolated) out.push_back(order[k]);
  return VertexSet(std::move(out));
}

ConstructionOrder make_construction_order(const Graph& g, std::vector<Vertex> order, VertexSet u) {
  ConstructionOrder co{std::move(order), std::move(u), {}};
  co.roles.reserve(co.order.size());
  for (std::size_t k = 0; k < co.order.size(); ++k) {
    if (k == 0) {
      co.roles.push_back(Role::initial);
      continue;
    }
    bool any = false;
    for (std::size_t j = 0; j < k && !any; ++j) any = g.adjacent(co.order[k], co.order[j]);
    co.roles.push_back(any ? Role::u_dominating : Role::isolated);
  }
  return co;
}

std::optional<std::string> check_construction_order(const Graph& g, const ConstructionOrder& co) {
  const int n = g.order();
  if (co.order.size() != static_cast<std::size_t>(n)) return "order does not list every vertex";
  if (co.roles.size() != co.order.size()) return "role count does not match order length";
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : co.order) {
    if (v < 1 || v > n) return "vertex " + std::to_string(v) + " out of range";
    if (seen[v]) return "vertex " + std::to_string(v) + " repeated";
    seen[v] = true;
  }
  for (Vertex v : co.u_set)
    if (v < 1 || v > n) return "U contains out-of-range vertex " + std::to_string(v);
  if (co.roles.front() != Role::initial) return "first vertex must be tagged initial";

  const auto in_u = co.u_set.mask(n);
  for (std::size_t k = 1; k < co.order.size(); ++k) {
    const Vertex v = co.order[k];
    bool lower_empty = true;
    bool equals_u_prefix = true;
    for (std::size_t j = 0; j < k; ++j) {
      const bool adj = g.adjacent(v, co.order[j]);
      lower_empty = lower_empty && !adj;
      equals_u_prefix = equals_u_prefix && (adj == in_u[co.order[j]]);
    }
    const std::string where = "vertex " + std::to_string(v) + " at position " + std::to_string(k + 1);
    switch (co.roles[k]) {
    case Role::initial: return where + " tagged initial";
    case Role::isolated:
      if (!lower_empty) return where + " tagged isolated but has earlier neighbours";
      break;
    case Role::u_dominating:
      if (lower_empty) return where + " tagged u_dominating but has no earlier neighbours";
      if (!equals_u_prefix) return where + " is neither isolated nor U-dominating";
      break;
    }
  }
  return std::nullopt;
}

namespace {

template <class Pick>
UThresholdResult eliminate(const Graph& g, const VertexSet& u, Pick pick) {
  const int n = g.order();
  for (Vertex v : u)
    if (v < 1 || v > n) throw std::out_of_range("U contains out-of-range vertex " + std::to_string(v));

  const auto in_u = u.mask(n);
  std::vector<bool> in_w(static_cast<std::size_t>(n) + 1, true);
  in_w[0] = false;
  int w_size = n;
  int wu_size = static_cast<int>(u.size());
  std::vector<Vertex> removed;
  std::vector<Vertex> candidates;

  while (w_size > 0) {
    candidates.clear();
    for (Vertex v = 1; v <= n; ++v) {
      if (!in_w[v]) continue;
      int nb_w = 0;
      int nb_wu = 0;
      for (Vertex x : g.neighbors(v)) {
        if (!in_w[x]) continue;
        ++nb_w;
        if (in_u[x]) ++nb_wu;
      }
      const int u_others = wu_size - (in_u[v] ? 1 : 0);
      if (nb_w == 0 || (nb_w == nb_wu && nb_wu == u_others)) candidates.push_back(v);
    }
    if (candidates.empty()) {
      std::vector<Vertex> rest;
      for (Vertex v = 1; v <= n; ++v)
        if (in_w[v]) rest.push_back(v);
      return {std::nullopt, VertexSet(std::move(rest))};
    }
    const Vertex v = pick(candidates);
    in_w[v] = false;
    --w_size;
    if (in_u[v]) --wu_size;
    removed.push_back(v);
  }
  std::reverse(removed.begin(), removed.end());
  return {make_construction_order(g, std::move(removed), u), {}};
}

} // namespace

UThresholdResult is_u_threshold(const Graph& g, const VertexSet& u) {
  return eliminate(g, u, [](const std::vector<Vertex>& c) { return c.back(); });
}

UThresholdResult is_u_threshold(const Graph& g, const VertexSet& u, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return eliminate(g, u, [&rng](const std::vector<Vertex>& c) {
    std::uniform_int_distribution<std::size_t> dist(0, c.size() - 1);
    return c[dist(rng)];
  });
}

UThresholdResult is_threshold(const Graph& g) { return is_u_threshold(g, g.vertices()); }

std::vector<int> threshold_class_rank(const Graph& g) {
  auto result = is_threshold(g);
  if (!result.ok()) throw std::invalid_argument("graph is not threshold");
  const auto& order = result.order->order;
  std::vector<int> rank(static_cast<std::size_t>(g.order()) + 1, -1);
  std::vector<int> first_at_degree(static_cast<std::size_t>(g.order()) + 1, -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Vertex v = order[k];
    const int d = g.degree(v);
    if (first_at_degree[d] < 0) {
      first_at_degree[d] = static_cast<int>(k);
    } else if (rank[order[k - 1]] != first_at_degree[d]) {
      throw ExactnessError("degree class " + std::to_string(d) +
                           " is not contiguous in the threshold construction order");
    }
    rank[v] = first_at_degree[d];
  }
  return rank;
}

namespace {

bool nested(const VertexSet& a, const VertexSet& b) { return a.is_subset_of(b) || b.is_subset_of(a); }

} // namespace

CanonicalOrder canonical_order(const Graph& g, const VertexSet& u) {
  if (!is_u_threshold(g, u).ok()) throw std::invalid_argument("graph is not U-threshold for the given U");
  const int n = g.order();
  const VertexSet all = g.vertices();
  const VertexSet uc = all.minus(u);
  const auto in_u = u.mask(n);

  // ≼ on U via the threshold construction order of G[U].
  std::vector<int> u_rank(static_cast<std::size_t>(n) + 1, 0);
  if (!u.empty()) {
    Subgraph sub = induced_subgraph(g, u);
    auto local = threshold_class_rank(sub.graph);
    for (std::size_t i = 0; i < sub.origin.size(); ++i) u_rank[sub.origin[i]] = local[i + 1];
  }

  struct Key {
    bool in_u;
    int deg_u;
    int deg_uc;
    bool operator==(const Key&) const = default;
  };
  std::vector<Key> keys;
  std::vector<std::vector<Vertex>> members;
  for (Vertex v = 1; v <= n; ++v) {
    Key k{static_cast<bool>(in_u[v]), g.degree_in(v, u), g.degree_in(v, uc)};
    auto it = std::find(keys.begin(), keys.end(), k);
    if (it == keys.end()) {
      keys.push_back(k);
      members.push_back({v});
    } else {
      members[static_cast<std::size_t>(it - keys.begin())].push_back(v);
    }
  }

  // x ⊴ y on class representatives.
  auto le = [&](std::size_t a, std::size_t b) {
    const Vertex x = members[a].front();
    const Vertex y = members[b].front();
    const Key& kx = keys[a];
    const Key& ky = keys[b];
    if (kx.in_u && ky.in_u) return u_rank[x] <= u_rank[y] && kx.deg_uc >= ky.deg_uc;
    if (kx.in_u && !ky.in_u) return g.adjacent(x, y);
    if (!kx.in_u && ky.in_u) return !g.adjacent(x, y);
    return kx.deg_u <= ky.deg_u;
  };

  const std::size_t k = keys.size();
  std::vector<std::size_t> position(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const bool ab = le(a, b);
      const bool ba = le(b, a);
      if (ab == ba)
        throw ExactnessError("class order is not total/antisymmetric between vertices " +
                             std::to_string(members[a].front()) + " and " +
                             std::to_string(members[b].front()));
      if (ba) ++position[a];
    }
  }
  std::vector<std::size_t> by_position(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    if (by_position[position[a]] != k) throw ExactnessError("class order is not transitive");
    by_position[position[a]] = a;
  }

  CanonicalOrder out;
  std::vector<Vertex> order;
  for (std::size_t idx : by_position) {
    out.classes.emplace_back(members[idx]);
    order.insert(order.end(), members[idx].begin(), members[idx].end());
  }
  out.order = make_construction_order(g, std::move(order), u);
  if (auto err = check_construction_order(g, out.order))
    throw ExactnessError("canonical order is not a construction order: " + *err);
  return out;
}

NestingReport nesting_report(const Graph& g, const VertexSet& u) {
  const int n = g.order();
  const VertexSet uc = g.vertices().minus(u);
  NestingReport report;

  for (Vertex x : uc)
    for (Vertex y : uc)
      if (x < y && g.adjacent(x, y) && report.complement_independent.holds)
        report.complement_independent = {false, std::make_pair(x, y), "edge inside U^c"};

  for (Vertex x : uc)
    for (Vertex y : uc)
      if (x < y && report.complement_nested.holds &&
          !nested(g.neighborhood(x), g.neighborhood(y)))
        report.complement_nested = {false, std::make_pair(x, y), "neighbourhoods in U^c not nested"};

  for (Vertex x : u)
    for (Vertex y : u)
      if (x < y && report.restricted_nested.holds &&
          !nested(g.neighborhood_in(x, uc), g.neighborhood_in(y, uc)))
        report.restricted_nested = {false, std::make_pair(x, y),
                                    "U^c-neighbourhoods of U vertices not nested"};

  if (!u.empty()) {
    Subgraph sub = induced_subgraph(g, u);
    std::vector<int> rank(static_cast<std::size_t>(n) + 1, 0);
    try {
      auto local = threshold_class_rank(sub.graph);
      for (std::size_t i = 0; i < sub.origin.size(); ++i) rank[sub.origin[i]] = local[i + 1];
    } catch (const std::exception& e) {
      report.monotone_along_threshold = {false, std::nullopt,
                                         std::string("G[U] has no threshold class order: ") + e.what()};
      return report;
    }
    for (Vertex v : u)
      for (Vertex w : u)
        if (rank[v] < rank[w] && report.monotone_along_threshold.holds &&
            !g.neighborhood_in(w, uc).is_subset_of(g.neighborhood_in(v, uc)))
          report.monotone_along_threshold = {false, std::make_pair(v, w),
                                             "v precedes w in G[U] but N_{U^c}(v) does not contain N_{U^c}(w)"};
  }
  return report;
}

std::optional<FerrersStructure> ferrers_recognize(const Graph& g, std::optional<Vertex> row_vertex) {
  if (g.edge_count() == 0 || !is_connected(g)) return std::nullopt;
  auto sides = bipartition(g);
  if (!sides) return std::nullopt;
  const int n = g.order();
  int row_side = 1 - (*sides)[1];
  if (row_vertex) {
    if (*row_vertex < 1 || *row_vertex > n) throw std::out_of_range("row vertex out of range");
    row_side = (*sides)[*row_vertex];
  }

  FerrersStructure fs;
  fs.vertex_count = n;
  for (Vertex v = 1; v <= n; ++v) ((*sides)[v] == row_side ? fs.rows : fs.columns).push_back(v);
  auto by_degree = [&g](Vertex a, Vertex b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
  };
  std::sort(fs.rows.begin(), fs.rows.end(), by_degree);
  std::sort(fs.columns.begin(), fs.columns.end(), by_degree);

  // Nested neighbourhoods: r_i is adjacent to exactly the first deg(r_i) columns.
  std::vector<int> parts;
  for (Vertex r : fs.rows) {
    const int d = g.degree(r);
    for (int j = 0; j < d; ++j)
      if (!g.adjacent(r, fs.columns[j])) return std::nullopt;
    parts.push_back(d);
  }
  fs.shape = PartitionShape(std::move(parts));

  // c_1, R_1, c_2, R_2, ... with each R_k in decreasing row index.
  const int m = fs.shape.rows();
  for (int k = 1; k <= fs.shape.columns(); ++k) {
    fs.traversal.push_back(fs.columns[k - 1]);
    for (int i = m; i >= 1; --i)
      if (fs.shape[i - 1] == k) fs.traversal.push_back(fs.rows[i - 1]);
  }
  return fs;
}

FerrersStructure ferrers_structure(const PartitionShape& shape) {
  FerrersGraph fg = ferrers_graph(shape);
  auto fs = ferrers_recognize(fg.graph, fg.rows.front());
  if (!fs || !(fs->shape == shape)) throw ExactnessError("Ferrers graph failed to recognise its own shape");
  return *fs;
}

ConstructionOrder construction_order(const FerrersStructure& fs) {
  ConstructionOrder co;
  co.order = fs.traversal;
  co.u_set = VertexSet(fs.columns);
  const VertexSet rows(fs.rows);
  for (std::size_t k = 0; k < co.order.size(); ++k) {
    if (k == 0)
      co.roles.push_back(Role::initial);
    else
      co.roles.push_back(rows.contains(co.order[k]) ? Role::u_dominating : Role::isolated);
  }
  return co;
}

Classification classify(const Graph& g, const SearchOptions& opts) {
  Classification c;
  if (auto t = is_threshold(g); t.ok()) {
    c.threshold = t.order;
  } else {
    c.threshold_witness = forbidden_subgraph_check(g, Family::threshold);
  }
  c.ferrers = ferrers_recognize(g);
  if (c.threshold) {
    c.special = SpecialThresholdMatch{g.vertices(), *c.threshold};
  } else if (c.ferrers) {
    c.special = SpecialThresholdMatch{VertexSet(c.ferrers->columns), construction_order(*c.ferrers)};
  } else if (g.order() <= opts.max_vertices) {
    c.special = find_special_2threshold_u(g, opts);
  } else {
    c.special_search_exceeded = true;
  }
  if (!c.special) c.special_witness = forbidden_subgraph_check(g, Family::special_2threshold);
  return c;
}

} // namespace spantree
