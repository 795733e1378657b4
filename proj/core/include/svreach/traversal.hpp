#ifndef SVREACH_TRAVERSAL_HPP
#define SVREACH_TRAVERSAL_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "svreach/digraph.hpp"

namespace svreach {

/// Reusable per-query working set for the static algorithms. Visited marks
/// are epoch-stamped so a query costs no O(n) clearing; buffers grow to the
/// largest graph seen and stay allocated.
class SearchScratch {
  public:
    void bind(VertexId n) {
        if (mark_a_.size() < n) {
            mark_a_.assign(n, 0);
            mark_b_.assign(n, 0);
            epoch_ = 0;
        }
    }
    void next_epoch() {
        if (++epoch_ == 0) { // wrapped; stamps from the old era must die
            std::fill(mark_a_.begin(), mark_a_.end(), 0);
            std::fill(mark_b_.begin(), mark_b_.end(), 0);
            epoch_ = 1;
        }
        queue_a_.clear();
        queue_b_.clear();
        pops = 0;
        pushes = 0;
    }

    bool seen_a(VertexId v) const { return mark_a_[v] == epoch_; }
    bool seen_b(VertexId v) const { return mark_b_[v] == epoch_; }
    void visit_a(VertexId v) { mark_a_[v] = epoch_; }
    void visit_b(VertexId v) { mark_b_[v] = epoch_; }

    std::vector<VertexId> queue_a_; // queue or stack, primary side
    std::vector<VertexId> queue_b_; // backward side (BiBFS only)

    // Work done by the most recent query; used by tests and instrumentation.
    std::uint64_t pops = 0;
    std::uint64_t pushes = 0;

  private:
    std::vector<std::uint32_t> mark_a_;
    std::vector<std::uint32_t> mark_b_;
    std::uint32_t epoch_ = 0;
};

/// Plain BFS from s; true iff an s-t path exists. s == t counts as reachable.
bool bfs_query(const DiGraph& g, SearchScratch& scratch, VertexId s, VertexId t);

/// Iterative DFS variant of bfs_query.
bool dfs_query(const DiGraph& g, SearchScratch& scratch, VertexId s, VertexId t);

/// DFS order, but every visited vertex also checks whether t sits in its
/// out-neighborhood, which answers one level earlier than dfs_query.
bool dbfs_query(const DiGraph& g, SearchScratch& scratch, VertexId s, VertexId t);

/// Two BFS runs, forward from s and backward from t, alternating one dequeued
/// vertex per turn; answers true as soon as one side reaches a vertex the
/// other has marked, false as soon as either side exhausts.
bool bibfs_query(const DiGraph& g, SearchScratch& scratch, VertexId s, VertexId t);

enum class StaticAlgo { Bfs, Dfs, Dbfs, BiBfs };

bool static_query(StaticAlgo algo, const DiGraph& g, SearchScratch& scratch,
                  VertexId s, VertexId t);

} // namespace svreach

#endif
