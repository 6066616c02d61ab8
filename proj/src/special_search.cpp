#include <algorithm>
#include <atomic>
#include <thread>

#include "spantree/errors.hpp"
#include "spantree/recognition.hpp"

namespace spantree {
namespace {

constexpr std::size_t kBatch = 256;

// Enumerates candidate complements S (independent, pairwise nested
// neighbourhoods) of a fixed size in lexicographic order, handing full
// batches to `flush`. Stops early when flush returns true.
class ComplementEnumerator {
public:
  template <class Flush>
  ComplementEnumerator(const Graph& g, int size, Flush&& flush) : g_(g), size_(size) {
    neighborhoods_.reserve(static_cast<std::size_t>(g.order()) + 1);
    neighborhoods_.emplace_back();
    for (Vertex v = 1; v <= g.order(); ++v) neighborhoods_.push_back(g.neighborhood(v));
    done_ = extend(1, flush) || (!batch_.empty() && flush(batch_));
  }

  bool stopped() const { return done_; }

private:
  template <class Flush>
  bool extend(Vertex from, Flush& flush) {
    if (static_cast<int>(chosen_.size()) == size_) {
      batch_.push_back(chosen_);
      if (batch_.size() < kBatch) return false;
      const bool stop = flush(batch_);
      batch_.clear();
      return stop;
    }
    const int remaining = size_ - static_cast<int>(chosen_.size());
    for (Vertex v = from; v <= g_.order() - remaining + 1; ++v) {
      if (!compatible(v)) continue;
      chosen_.push_back(v);
      const bool stop = extend(v + 1, flush);
      chosen_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  bool compatible(Vertex v) const {
    for (Vertex x : chosen_) {
      if (g_.adjacent(v, x)) return false;
      const auto& a = neighborhoods_[v];
      const auto& b = neighborhoods_[x];
      if (!a.is_subset_of(b) && !b.is_subset_of(a)) return false;
    }
    return true;
  }

  const Graph& g_;
  int size_;
  std::vector<VertexSet> neighborhoods_;
  std::vector<Vertex> chosen_;
  std::vector<std::vector<Vertex>> batch_;
  bool done_ = false;
};

} // namespace

std::optional<SpecialThresholdMatch> find_special_2threshold_u(const Graph& g,
                                                               const SearchOptions& opts) {
  if (g.order() > opts.max_vertices)
    throw CapabilityExceeded("special 2-threshold search is limited to " +
                             std::to_string(opts.max_vertices) + " vertices (graph has " +
                             std::to_string(g.order()) + ")");
  const VertexSet all = g.vertices();
  const unsigned jobs = std::max(1u, opts.jobs);
  std::optional<SpecialThresholdMatch> found;

  // Evaluates a batch; keeps the first success in batch order so the answer
  // does not depend on scheduling.
  auto flush = [&](const std::vector<std::vector<Vertex>>& batch) {
    std::vector<std::optional<ConstructionOrder>> results(batch.size());
    auto work = [&](std::size_t begin, std::size_t step) {
      for (std::size_t i = begin; i < batch.size(); i += step) {
        VertexSet u = all.minus(VertexSet(batch[i]));
        if (auto r = is_u_threshold(g, u); r.ok()) results[i] = std::move(r.order);
      }
    };
    if (jobs == 1 || batch.size() < 2) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (results[i]) {
        found = SpecialThresholdMatch{results[i]->u_set, std::move(*results[i])};
        return true;
      }
    }
    return false;
  };

  for (int size = 0; size <= g.order(); ++size) {
    ComplementEnumerator e(g, size, flush);
    if (e.stopped() && found) return found;
  }
  return std::nullopt;
}

} // namespace spantree
