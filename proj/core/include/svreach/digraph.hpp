#ifndef SVREACH_DIGRAPH_HPP
#define SVREACH_DIGRAPH_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

namespace svreach {

using VertexId = std::uint32_t;
using EdgeId = std::uint64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

enum class Direction { Forward, Reverse };

inline Direction reverse(Direction d) {
    return d == Direction::Forward ? Direction::Reverse : Direction::Forward;
}

/// One adjacency slot: the edge id and the endpoint on the far side.
struct AdjEntry {
    EdgeId edge;
    VertexId to;
};

/// Gets told about every mutation, after the adjacency has been updated.
class GraphObserver {
  public:
    virtual ~GraphObserver() = default;
    virtual void on_edge_inserted(EdgeId e, VertexId tail, VertexId head) = 0;
    virtual void on_edge_deleted(EdgeId e, VertexId tail, VertexId head) = 0;
};

/// Dynamic directed multigraph over a fixed vertex set [0, n).
///
/// Parallel edges and loops are allowed. Insertion and deletion are O(1)
/// expected; adjacency removal swaps with the last slot, so iteration order
/// depends on the mutation history but is deterministic. Edge ids are never
/// reused. delete_edge(u, v) removes the most recently inserted live edge
/// with that tail/head pair.
class DiGraph {
  public:
    struct MutationWork {
        std::uint64_t adjacency_writes = 0;
    };

    explicit DiGraph(VertexId n);

    VertexId vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return edges_.size(); }
    double density() const {
        return n_ == 0 ? 0.0 : static_cast<double>(edges_.size()) / n_;
    }

    EdgeId insert_edge(VertexId tail, VertexId head);
    EdgeId delete_edge(VertexId tail, VertexId head);

    bool has_edge(VertexId tail, VertexId head) const;

    std::span<const AdjEntry> out_edges(VertexId v) const { return out_[v]; }
    std::span<const AdjEntry> in_edges(VertexId v) const { return in_[v]; }
    std::span<const AdjEntry> edges(VertexId v, Direction d) const {
        return d == Direction::Forward ? out_edges(v) : in_edges(v);
    }

    std::uint32_t out_degree(VertexId v) const {
        return static_cast<std::uint32_t>(out_[v].size());
    }
    std::uint32_t in_degree(VertexId v) const {
        return static_cast<std::uint32_t>(in_[v].size());
    }
    bool is_isolated(VertexId v) const {
        return out_[v].empty() && in_[v].empty();
    }

    void add_observer(GraphObserver* obs);
    void remove_observer(GraphObserver* obs);

    const MutationWork& mutation_work() const { return work_; }

    /// Cross-checks adjacency, edge records and counts; throws
    /// std::logic_error on the first violation. Intended for small graphs.
    void audit() const;

  private:
    struct EdgeRec {
        VertexId tail;
        VertexId head;
        std::uint32_t out_pos; // slot in out_[tail]
        std::uint32_t in_pos;  // slot in in_[head]
    };

    static std::uint64_t pack(VertexId u, VertexId v) {
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }
    void check_vertex(VertexId v) const;
    void remove_adjacency(const EdgeRec& rec, EdgeId e);

    VertexId n_;
    EdgeId next_edge_id_ = 0;
    std::unordered_map<EdgeId, EdgeRec> edges_;
    // Live edge ids per (tail, head) pair, in insertion order.
    std::unordered_map<std::uint64_t, std::vector<EdgeId>> by_endpoints_;
    std::vector<std::vector<AdjEntry>> out_;
    std::vector<std::vector<AdjEntry>> in_;
    std::vector<GraphObserver*> observers_;
    MutationWork work_;
};

} // namespace svreach

#endif
