#include "svreach/ssr.hpp"

#include <algorithm>
#include <stdexcept>

#include "svreach/errors.hpp"

namespace svreach {

SsrEngine::SsrEngine(SsrKind kind, const DiGraph& g, VertexId root,
                     Direction dir, SsrParams params)
    : g_(g), kind_(kind), root_(root), dir_(dir), params_(params) {
    if (root >= g.vertex_count()) {
        throw std::out_of_range("ssr root out of range");
    }
    if (params.ratio < 0.0 || params.ratio > 1.0) {
        throw ConfigError("ssr ratio must lie in [0, 1]");
    }
    if (params.beta < 1) {
        throw ConfigError("ssr beta must be >= 1");
    }
    const VertexId n = g.vertex_count();
    parent_edge_.assign(n, kNoEdge);
    parent_vertex_.assign(n, kNoVertex);
    children_.resize(n);
    child_pos_.assign(n, 0);
}

void SsrEngine::on_insert(EdgeId e, VertexId tail, VertexId head) {
    if (dir_ == Direction::Forward) {
        handle_insert(e, tail, head);
    } else {
        handle_insert(e, head, tail);
    }
}

void SsrEngine::on_delete(EdgeId e, VertexId tail, VertexId head) {
    if (dir_ == Direction::Forward) {
        handle_delete(e, tail, head);
    } else {
        handle_delete(e, head, tail);
    }
}

void SsrEngine::link(VertexId child, VertexId parent, EdgeId via) {
    parent_vertex_[child] = parent;
    parent_edge_[child] = via;
    child_pos_[child] = static_cast<std::uint32_t>(children_[parent].size());
    children_[parent].push_back(child);
}

void SsrEngine::unlink(VertexId child) {
    const VertexId p = parent_vertex_[child];
    if (p == kNoVertex) return;
    auto& siblings = children_[p];
    const std::uint32_t pos = child_pos_[child];
    siblings[pos] = siblings.back();
    child_pos_[siblings[pos]] = pos;
    siblings.pop_back();
    parent_vertex_[child] = kNoVertex;
    parent_edge_[child] = kNoEdge;
}

void SsrEngine::reset_tree() {
    std::fill(parent_edge_.begin(), parent_edge_.end(), kNoEdge);
    std::fill(parent_vertex_.begin(), parent_vertex_.end(), kNoVertex);
    for (auto& c : children_) c.clear();
}

// ---------------------------------------------------------------------------
// SI

SiEngine::SiEngine(const DiGraph& g, VertexId root, Direction dir,
                   SsrParams params)
    : SsrEngine(SsrKind::SI, g, root, dir, params) {
    reachable_.assign(g.vertex_count(), 0);
    detached_mark_.assign(g.vertex_count(), 0);
    recompute();
}

void SiEngine::recompute() {
    reset_tree();
    std::fill(reachable_.begin(), reachable_.end(), 0);
    reachable_[root_] = 1;
    bfs_queue_.clear();
    bfs_queue_.push_back(root_);
    for (std::size_t head = 0; head < bfs_queue_.size(); ++head) {
        const VertexId v = bfs_queue_[head];
        ++counters_.vertices_processed;
        for (const AdjEntry& a : tree_out(v)) {
            if (!reachable_[a.to]) {
                reachable_[a.to] = 1;
                link(a.to, v, a.edge);
                bfs_queue_.push_back(a.to);
            }
        }
    }
    ++counters_.recomputations;
}

void SiEngine::handle_insert(EdgeId e, VertexId from, VertexId to) {
    if (!reachable_[from] || reachable_[to]) return;
    reachable_[to] = 1;
    link(to, from, e);
    bfs_queue_.clear();
    bfs_queue_.push_back(to);
    for (std::size_t head = 0; head < bfs_queue_.size(); ++head) {
        const VertexId v = bfs_queue_[head];
        ++counters_.vertices_processed;
        for (const AdjEntry& a : tree_out(v)) {
            if (!reachable_[a.to]) {
                reachable_[a.to] = 1;
                link(a.to, v, a.edge);
                bfs_queue_.push_back(a.to);
            }
        }
    }
}

void SiEngine::handle_delete(EdgeId e, VertexId from, VertexId to) {
    counters_.last_delete_processed = 0;
    counters_.last_delete_aborted = false;
    (void)from;
    if (parent_edge_[to] != e) return; // not a tree edge: the tree is intact

    if (++detach_epoch_ == 0) {
        std::fill(detached_mark_.begin(), detached_mark_.end(), 0);
        detach_epoch_ = 1;
    }
    const double max_detached = params_.ratio * g_.vertex_count();

    unlink(to);
    detached_.clear();
    detached_.push_back(to);
    detached_mark_[to] = detach_epoch_;
    reachable_[to] = 0;
    if (static_cast<double>(detached_.size()) > max_detached) {
        counters_.last_delete_aborted = true;
        recompute();
        return;
    }
    for (std::size_t i = 0; i < detached_.size(); ++i) {
        const VertexId w = detached_[i];
        ++counters_.last_delete_processed;
        ++counters_.vertices_processed;
        for (VertexId c : children_[w]) {
            detached_.push_back(c);
            detached_mark_[c] = detach_epoch_;
            reachable_[c] = 0;
            if (static_cast<double>(detached_.size()) > max_detached) {
                counters_.last_delete_aborted = true;
                recompute();
                return;
            }
        }
    }
    // The subtree is out; parent links inside it are void now.
    for (VertexId w : detached_) {
        children_[w].clear();
        parent_vertex_[w] = kNoVertex;
        parent_edge_[w] = kNoEdge;
    }

    // Hook detached vertices onto the remaining tree where an incoming edge
    // from a reachable vertex exists, then grow by BFS from every hook.
    bfs_queue_.clear();
    for (VertexId w : detached_) {
        for (const AdjEntry& a : tree_in(w)) {
            if (reachable_[a.to]) {
                reachable_[w] = 1;
                link(w, a.to, a.edge);
                bfs_queue_.push_back(w);
                break;
            }
        }
    }
    for (std::size_t head = 0; head < bfs_queue_.size(); ++head) {
        const VertexId v = bfs_queue_[head];
        ++counters_.last_delete_processed;
        ++counters_.vertices_processed;
        for (const AdjEntry& a : tree_out(v)) {
            if (!reachable_[a.to] && detached_mark_[a.to] == detach_epoch_) {
                reachable_[a.to] = 1;
                link(a.to, v, a.edge);
                bfs_queue_.push_back(a.to);
            }
        }
    }
    // Whatever is still unmarked lost its last path and stays unreachable.
}

// ---------------------------------------------------------------------------
// SES

SesEngine::SesEngine(const DiGraph& g, VertexId root, Direction dir,
                     SsrParams params)
    : SsrEngine(SsrKind::SES, g, root, dir, params) {
    const VertexId n = g.vertex_count();
    level_.assign(n, n);
    in_queue_mark_.assign(n, 0);
    queued_mark_.assign(n, 0);
    raise_count_.assign(n, 0);
    raise_mark_.assign(n, 0);
    recompute();
}

void SesEngine::recompute() {
    reset_tree();
    const std::uint32_t inf = unreachable_level();
    std::fill(level_.begin(), level_.end(), inf);
    level_[root_] = 0;
    queue_.clear();
    queue_.push_back(root_);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const VertexId v = queue_[head];
        ++counters_.vertices_processed;
        for (const AdjEntry& a : tree_out(v)) {
            if (level_[a.to] == inf) {
                level_[a.to] = level_[v] + 1;
                link(a.to, v, a.edge);
                queue_.push_back(a.to);
            }
        }
    }
    ++counters_.recomputations;
}

void SesEngine::handle_insert(EdgeId e, VertexId from, VertexId to) {
    if (level_[from] >= unreachable_level()) return;
    if (level_[from] + 1 >= level_[to]) return;
    unlink(to);
    link(to, from, e);
    level_[to] = level_[from] + 1;
    // Improvements cascade along shortest paths out of `to`; plain BFS
    // touches each improved vertex once.
    queue_.clear();
    queue_.push_back(to);
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const VertexId v = queue_[head];
        ++counters_.vertices_processed;
        for (const AdjEntry& a : tree_out(v)) {
            if (level_[v] + 1 < level_[a.to]) {
                unlink(a.to);
                link(a.to, v, a.edge);
                level_[a.to] = level_[v] + 1;
                queue_.push_back(a.to);
            }
        }
    }
}

bool SesEngine::enqueue(VertexId v, std::uint64_t& distinct, double max_distinct) {
    if (queued_mark_[v] != delete_epoch_) {
        queued_mark_[v] = delete_epoch_;
        if (static_cast<double>(++distinct) > max_distinct) return false;
    }
    if (in_queue_mark_[v] != delete_epoch_) {
        in_queue_mark_[v] = delete_epoch_;
        queue_.push_back(v);
    }
    return true;
}

void SesEngine::handle_delete(EdgeId e, VertexId from, VertexId to) {
    counters_.last_delete_processed = 0;
    counters_.last_delete_aborted = false;
    (void)from;
    if (parent_edge_[to] != e) return; // non-tree edge: all distances intact

    if (++delete_epoch_ == 0) {
        std::fill(in_queue_mark_.begin(), in_queue_mark_.end(), 0);
        std::fill(queued_mark_.begin(), queued_mark_.end(), 0);
        std::fill(raise_mark_.begin(), raise_mark_.end(), 0);
        delete_epoch_ = 1;
    }
    const std::uint32_t inf = unreachable_level();
    const double max_distinct = params_.ratio * g_.vertex_count();
    std::uint64_t distinct = 0;

    unlink(to);
    queue_.clear();
    if (!enqueue(to, distinct, max_distinct)) {
        counters_.last_delete_aborted = true;
        recompute();
        return;
    }

    std::size_t head = 0;
    while (head < queue_.size()) {
        const VertexId w = queue_[head++];
        in_queue_mark_[w] = 0;
        ++counters_.last_delete_processed;
        ++counters_.vertices_processed;
        if (level_[w] >= inf) continue;

        // Even-Shiloach step: any in-neighbor exactly one level up keeps w.
        const std::uint32_t want = level_[w] - 1;
        bool hooked = false;
        for (const AdjEntry& a : tree_in(w)) {
            if (level_[a.to] == want) {
                unlink(w);
                link(w, a.to, a.edge);
                hooked = true;
                break;
            }
        }
        if (hooked) continue;

        if (raise_mark_[w] != delete_epoch_) {
            raise_mark_[w] = delete_epoch_;
            raise_count_[w] = 0;
        }
        if (raise_count_[w] >= params_.beta) {
            counters_.last_delete_aborted = true;
            recompute();
            return;
        }
        ++raise_count_[w];

        // w drifts one level down; its tree children must re-justify theirs.
        for (VertexId c : children_[w]) {
            if (!enqueue(c, distinct, max_distinct)) {
                counters_.last_delete_aborted = true;
                recompute();
                return;
            }
        }
        if (level_[w] + 1 >= inf) {
            level_[w] = inf;
            unlink(w);
        } else {
            ++level_[w];
            if (!enqueue(w, distinct, max_distinct)) {
                counters_.last_delete_aborted = true;
                recompute();
                return;
            }
        }
    }
}

std::unique_ptr<SsrEngine> make_ssr_engine(SsrKind kind, const DiGraph& g,
                                           VertexId root, Direction dir,
                                           SsrParams params) {
    if (kind == SsrKind::SI) {
        return std::make_unique<SiEngine>(g, root, dir, params);
    }
    return std::make_unique<SesEngine>(g, root, dir, params);
}

} // namespace svreach
