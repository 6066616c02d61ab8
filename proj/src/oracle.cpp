#include <algorithm>
#include <numeric>
#include <thread>

#include "spantree/errors.hpp"
#include "spantree/tree_count.hpp"

namespace spantree {
namespace {

class DisjointSets {
public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n) + 1) { reset(); }

  void reset() { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

private:
  std::vector<int> parent_;
};

// Visits every (n-1)-subset of the edge list whose first element index is
// congruent to `lane` modulo `lanes`, calling visit(selection) for each
// subset that forms a spanning tree.
template <class Visit>
void enumerate_trees(const Graph& g, const std::vector<Edge>& edges, unsigned lane, unsigned lanes,
                     Visit&& visit) {
  const int k = g.order() - 1;
  const int m = static_cast<int>(edges.size());
  std::vector<int> pick(static_cast<std::size_t>(k));
  DisjointSets sets(g.order());
  for (int first = static_cast<int>(lane); first <= m - k; first += static_cast<int>(lanes)) {
    pick[0] = first;
    for (int i = 1; i < k; ++i) pick[i] = first + i;
    while (true) {
      sets.reset();
      bool acyclic = true;
      for (int i = 0; i < k && acyclic; ++i)
        acyclic = sets.unite(edges[pick[i]].first, edges[pick[i]].second);
      if (acyclic) visit(pick);

      // advance positions 1..k-1, keeping pick[0] fixed
      int i = k - 1;
      while (i >= 1 && pick[i] == m - k + i) --i;
      if (i < 1) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

void check_guard(const Graph& g, const OracleOptions& opts) {
  if (g.edge_count() > opts.max_edges)
    throw CapabilityExceeded("brute-force enumeration is limited to " + std::to_string(opts.max_edges) +
                             " edges (graph has " + std::to_string(g.edge_count()) + ")");
}

} // namespace

BigInt oracle_count(const Graph& g, const OracleOptions& opts) {
  check_guard(g, opts);
  if (g.order() == 1) return 1;
  const auto edges = g.edges();
  if (edges.size() < static_cast<std::size_t>(g.order() - 1)) return 0;

  const unsigned lanes = std::max(1u, opts.jobs);
  std::vector<unsigned long long> partial(lanes, 0);
  auto run = [&](unsigned lane) {
    enumerate_trees(g, edges, lane, lanes, [&](const std::vector<int>&) { ++partial[lane]; });
  };
  if (lanes == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < lanes; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }
  BigInt total = 0;
  for (auto c : partial) total += c;
  return total;
}

std::vector<std::vector<Edge>> oracle_trees(const Graph& g, const OracleOptions& opts) {
  check_guard(g, opts);
  if (g.order() == 1) return {{}};
  const auto edges = g.edges();
  std::vector<std::vector<Edge>> trees;
  if (edges.size() < static_cast<std::size_t>(g.order() - 1)) return trees;
  enumerate_trees(g, edges, 0, 1, [&](const std::vector<int>& pick) {
    std::vector<Edge> tree;
    for (int i : pick) tree.push_back(edges[i]);
    trees.push_back(std::move(tree));
  });
  return trees;
}

} // namespace spantree
