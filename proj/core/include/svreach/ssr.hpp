#ifndef SVREACH_SSR_HPP
#define SVREACH_SSR_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "svreach/digraph.hpp"

namespace svreach {

enum class SsrKind { SI, SES };

/// Rebuild thresholds. `ratio` caps the fraction of vertices an incremental
/// repair may touch before the engine falls back to a full recompute; `beta`
/// additionally caps how often a single vertex's level may rise within one
/// deletion (SES only; SI ignores it).
struct SsrParams {
    double ratio = 0.25;
    std::uint32_t beta = 5;
};

struct SsrCounters {
    std::uint64_t recomputations = 0;     // full from-scratch rebuilds, incl. init
    std::uint64_t vertices_processed = 0; // queue pops across all operations
    std::uint64_t last_delete_processed = 0; // pops by the last deletion, before any recompute
    bool last_delete_aborted = false;     // last deletion hit a threshold
};

/// Fully dynamic single-source (Forward) or single-sink (Reverse) reachability
/// from a fixed root. A Reverse engine behaves exactly like a Forward engine
/// on the edge-reversed graph; it traverses the in-adjacency instead of
/// keeping a mirrored copy. Notifications carry graph-oriented endpoints and
/// must arrive after the mutation has been applied. Space is O(n).
class SsrEngine {
  public:
    virtual ~SsrEngine() = default;

    void on_insert(EdgeId e, VertexId tail, VertexId head);
    void on_delete(EdgeId e, VertexId tail, VertexId head);

    /// O(1): is v reachable from the root (Forward) / does v reach it (Reverse)?
    virtual bool query(VertexId v) const = 0;

    SsrKind kind() const { return kind_; }
    VertexId root() const { return root_; }
    Direction direction() const { return dir_; }
    const SsrParams& params() const { return params_; }
    const SsrCounters& counters() const { return counters_; }

  protected:
    SsrEngine(SsrKind kind, const DiGraph& g, VertexId root, Direction dir,
              SsrParams params);

    virtual void handle_insert(EdgeId e, VertexId from, VertexId to) = 0;
    virtual void handle_delete(EdgeId e, VertexId from, VertexId to) = 0;

    // Adjacency as seen by this engine's orientation.
    std::span<const AdjEntry> tree_out(VertexId v) const { return g_.edges(v, dir_); }
    std::span<const AdjEntry> tree_in(VertexId v) const {
        return g_.edges(v, reverse(dir_));
    }

    void link(VertexId child, VertexId parent, EdgeId via);
    void unlink(VertexId child);
    void reset_tree();

    const DiGraph& g_;
    SsrKind kind_;
    VertexId root_;
    Direction dir_;
    SsrParams params_;
    SsrCounters counters_;

    std::vector<EdgeId> parent_edge_;
    std::vector<VertexId> parent_vertex_;
    std::vector<std::vector<VertexId>> children_;
    std::vector<std::uint32_t> child_pos_;
};

/// Lazy reachability tree: inserts extend the tree by BFS only when new
/// vertices become reachable; deleting a tree edge detaches the subtree below
/// it, tries to hook detached vertices onto the remaining tree, and BFS-grows
/// from every hook point. If the detached set passes ratio*n the whole tree
/// is recomputed instead. The tree is not height-minimal.
class SiEngine final : public SsrEngine {
  public:
    SiEngine(const DiGraph& g, VertexId root, Direction dir, SsrParams params);

    bool query(VertexId v) const override { return reachable_[v] != 0; }

  private:
    void handle_insert(EdgeId e, VertexId from, VertexId to) override;
    void handle_delete(EdgeId e, VertexId from, VertexId to) override;
    void recompute();

    std::vector<char> reachable_;
    // scratch for deletions
    std::vector<VertexId> detached_;
    std::vector<std::uint32_t> detached_mark_;
    std::uint32_t detach_epoch_ = 0;
    std::vector<VertexId> bfs_queue_;
};

/// Simplified Even-Shiloach tree: levels are exact BFS distances after every
/// update. Deletion raises the levels of affected vertices one step at a
/// time; the repair aborts into a full recompute when one vertex has been
/// raised more than beta times or when more than ratio*n distinct vertices
/// have entered the work queue. Unreachable vertices sit at the sentinel
/// level n.
class SesEngine final : public SsrEngine {
  public:
    SesEngine(const DiGraph& g, VertexId root, Direction dir, SsrParams params);

    bool query(VertexId v) const override { return level_[v] < unreachable_level(); }

    /// Exact oriented BFS distance from the root, or n when unreachable.
    std::uint32_t level(VertexId v) const { return level_[v]; }
    std::uint32_t unreachable_level() const { return g_.vertex_count(); }

  private:
    void handle_insert(EdgeId e, VertexId from, VertexId to) override;
    void handle_delete(EdgeId e, VertexId from, VertexId to) override;
    void recompute();
    bool enqueue(VertexId v, std::uint64_t& distinct, double max_distinct);

    std::vector<std::uint32_t> level_;
    // per-deletion scratch, epoch-stamped to avoid O(n) clears
    std::vector<VertexId> queue_;
    std::vector<std::uint32_t> in_queue_mark_;
    std::vector<std::uint32_t> queued_mark_;
    std::vector<std::uint32_t> raise_count_;
    std::vector<std::uint32_t> raise_mark_;
    std::uint32_t delete_epoch_ = 0;
};

std::unique_ptr<SsrEngine> make_ssr_engine(SsrKind kind, const DiGraph& g,
                                           VertexId root, Direction dir,
                                           SsrParams params);

} // namespace svreach

#endif
