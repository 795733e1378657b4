#include "svreach/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "svreach/errors.hpp"

namespace svreach {

DiGraph::DiGraph(VertexId n) : n_(n), out_(n), in_(n) {}

void DiGraph::check_vertex(VertexId v) const {
    if (v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n_) + ")");
    }
}

EdgeId DiGraph::insert_edge(VertexId tail, VertexId head) {
    check_vertex(tail);
    check_vertex(head);
    const EdgeId e = next_edge_id_++;
    out_[tail].push_back({e, head});
    in_[head].push_back({e, tail});
    work_.adjacency_writes += 2;
    edges_.emplace(e, EdgeRec{tail, head,
                              static_cast<std::uint32_t>(out_[tail].size() - 1),
                              static_cast<std::uint32_t>(in_[head].size() - 1)});
    by_endpoints_[pack(tail, head)].push_back(e);
    for (GraphObserver* obs : observers_) {
        obs->on_edge_inserted(e, tail, head);
    }
    return e;
}

void DiGraph::remove_adjacency(const EdgeRec& rec, EdgeId e) {
    // Every edge owns exactly one slot in out_[tail] and one in in_[head],
    // so the swapped-in survivor is always a different edge.
    auto& outs = out_[rec.tail];
    const std::uint32_t op = rec.out_pos;
    outs[op] = outs.back();
    outs.pop_back();
    ++work_.adjacency_writes;
    if (op < outs.size()) {
        edges_.at(outs[op].edge).out_pos = op;
        ++work_.adjacency_writes;
    }
    auto& ins = in_[rec.head];
    const std::uint32_t ip = rec.in_pos;
    ins[ip] = ins.back();
    ins.pop_back();
    ++work_.adjacency_writes;
    if (ip < ins.size()) {
        edges_.at(ins[ip].edge).in_pos = ip;
        ++work_.adjacency_writes;
    }
    (void)e;
}

EdgeId DiGraph::delete_edge(VertexId tail, VertexId head) {
    check_vertex(tail);
    check_vertex(head);
    auto it = by_endpoints_.find(pack(tail, head));
    if (it == by_endpoints_.end() || it->second.empty()) {
        throw MissingEdgeError(tail, head);
    }
    const EdgeId e = it->second.back(); // most recently inserted parallel
    it->second.pop_back();
    if (it->second.empty()) {
        by_endpoints_.erase(it);
    }
    auto rec_it = edges_.find(e);
    remove_adjacency(rec_it->second, e);
    edges_.erase(rec_it);
    for (GraphObserver* obs : observers_) {
        obs->on_edge_deleted(e, tail, head);
    }
    return e;
}

bool DiGraph::has_edge(VertexId tail, VertexId head) const {
    if (tail >= n_ || head >= n_) return false;
    auto it = by_endpoints_.find(pack(tail, head));
    return it != by_endpoints_.end() && !it->second.empty();
}

void DiGraph::add_observer(GraphObserver* obs) { observers_.push_back(obs); }

void DiGraph::remove_observer(GraphObserver* obs) {
    observers_.erase(std::remove(observers_.begin(), observers_.end(), obs),
                     observers_.end());
}

void DiGraph::audit() const {
    auto fail = [](const std::string& what) { throw std::logic_error("graph audit: " + what); };
    std::uint64_t out_total = 0;
    std::uint64_t in_total = 0;
    for (VertexId v = 0; v < n_; ++v) {
        out_total += out_[v].size();
        in_total += in_[v].size();
        for (std::uint32_t i = 0; i < out_[v].size(); ++i) {
            const AdjEntry& a = out_[v][i];
            auto it = edges_.find(a.edge);
            if (it == edges_.end()) fail("dead edge id in out adjacency");
            const EdgeRec& rec = it->second;
            if (rec.tail != v || rec.head != a.to) fail("out entry endpoint mismatch");
            if (rec.out_pos != i) fail("out_pos index mismatch");
        }
        for (std::uint32_t i = 0; i < in_[v].size(); ++i) {
            const AdjEntry& a = in_[v][i];
            auto it = edges_.find(a.edge);
            if (it == edges_.end()) fail("dead edge id in in adjacency");
            const EdgeRec& rec = it->second;
            if (rec.head != v || rec.tail != a.to) fail("in entry endpoint mismatch");
            if (rec.in_pos != i) fail("in_pos index mismatch");
        }
    }
    if (out_total != edges_.size()) fail("out adjacency total != m");
    if (in_total != edges_.size()) fail("in adjacency total != m");
    std::uint64_t bucket_total = 0;
    for (const auto& [key, ids] : by_endpoints_) {
        if (ids.empty()) fail("empty endpoint bucket kept alive");
        bucket_total += ids.size();
        for (EdgeId e : ids) {
            auto it = edges_.find(e);
            if (it == edges_.end()) fail("dead edge id in endpoint bucket");
            if (pack(it->second.tail, it->second.head) != key) fail("bucket key mismatch");
        }
    }
    if (bucket_total != edges_.size()) fail("endpoint bucket total != m");
}

} // namespace svreach
