#include "svreach/traversal.hpp"

#include <stdexcept>

namespace svreach {

namespace {

void check_pair(const DiGraph& g, VertexId s, VertexId t) {
    if (s >= g.vertex_count() || t >= g.vertex_count()) {
        throw std::out_of_range("query endpoint out of range");
    }
}

} // namespace

bool bfs_query(const DiGraph& g, SearchScratch& scratch, VertexId s, VertexId t) {
    check_pair(g, s, t);
    scratch.bind(g.vertex_count());
    scratch.next_epoch();
    auto& queue = scratch.queue_a_;
    scratch.visit_a(s);
    queue.push_back(s);
    ++scratch.pushes;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const VertexId v = queue[head];
        ++scratch.pops;
        if (v == t) return true;
        for (const AdjEntry& a : g.out_edges(v)) {
            if (!scratch.seen_a(a.to)) {
                scratch.visit_a(a.to);
                queue.push_back(a.to);
                ++scratch.pushes;
            }
        }
    }
    return false;
}

bool dfs_query(const DiGraph& g, SearchScratch& scratch, VertexId s, VertexId t) {
    check_pair(g, s, t);
    scratch.bind(g.vertex_count());
    scratch.next_epoch();
    auto& stack = scratch.queue_a_;
    scratch.visit_a(s);
    stack.push_back(s);
    ++scratch.pushes;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        ++scratch.pops;
        if (v == t) return true;
        for (const AdjEntry& a : g.out_edges(v)) {
            if (!scratch.seen_a(a.to)) {
                scratch.visit_a(a.to);
                stack.push_back(a.to);
                ++scratch.pushes;
            }
        }
    }
    return false;
}

bool dbfs_query(const DiGraph& g, SearchScratch& scratch, VertexId s, VertexId t) {
    check_pair(g, s, t);
    if (s == t) return true;
    scratch.bind(g.vertex_count());
    scratch.next_epoch();
    auto& stack = scratch.queue_a_;
    scratch.visit_a(s);
    stack.push_back(s);
    ++scratch.pushes;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        ++scratch.pops;
        for (const AdjEntry& a : g.out_edges(v)) {
            if (a.to == t) return true;
            if (!scratch.seen_a(a.to)) {
                scratch.visit_a(a.to);
                stack.push_back(a.to);
                ++scratch.pushes;
            }
        }
    }
    return false;
}

bool bibfs_query(const DiGraph& g, SearchScratch& scratch, VertexId s, VertexId t) {
    check_pair(g, s, t);
    if (s == t) return true;
    scratch.bind(g.vertex_count());
    scratch.next_epoch();
    auto& fwd = scratch.queue_a_;
    auto& bwd = scratch.queue_b_;
    scratch.visit_a(s);
    fwd.push_back(s);
    scratch.visit_b(t);
    bwd.push_back(t);
    scratch.pushes += 2;

    std::size_t fwd_head = 0;
    std::size_t bwd_head = 0;
    bool forward_turn = true; // forward search moves first
    for (;;) {
        if (forward_turn) {
            if (fwd_head == fwd.size()) return false; // R+(s) exhausted
            const VertexId v = fwd[fwd_head++];
            ++scratch.pops;
            for (const AdjEntry& a : g.out_edges(v)) {
                if (scratch.seen_b(a.to)) return true;
                if (!scratch.seen_a(a.to)) {
                    scratch.visit_a(a.to);
                    fwd.push_back(a.to);
                    ++scratch.pushes;
                }
            }
        } else {
            if (bwd_head == bwd.size()) return false; // R-(t) exhausted
            const VertexId v = bwd[bwd_head++];
            ++scratch.pops;
            for (const AdjEntry& a : g.in_edges(v)) {
                if (scratch.seen_a(a.to)) return true;
                if (!scratch.seen_b(a.to)) {
                    scratch.visit_b(a.to);
                    bwd.push_back(a.to);
                    ++scratch.pushes;
                }
            }
        }
        forward_turn = !forward_turn;
    }
}

bool static_query(StaticAlgo algo, const DiGraph& g, SearchScratch& scratch,
                  VertexId s, VertexId t) {
    switch (algo) {
    case StaticAlgo::Bfs: return bfs_query(g, scratch, s, t);
    case StaticAlgo::Dfs: return dfs_query(g, scratch, s, t);
    case StaticAlgo::Dbfs: return dbfs_query(g, scratch, s, t);
    case StaticAlgo::BiBfs: return bibfs_query(g, scratch, s, t);
    }
    return false;
}

} // namespace svreach
