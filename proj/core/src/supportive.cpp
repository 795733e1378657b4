#include "svreach/supportive.hpp"

#include <algorithm>
#include <stdexcept>

#include "svreach/errors.hpp"
#include "svreach/rng.hpp"
#include "svreach/scc.hpp"

namespace svreach {

const char* query_stage_name(QueryStage stage) {
    switch (stage) {
    case QueryStage::SourceSupportive: return "source_supportive";
    case QueryStage::TargetSupportive: return "target_supportive";
    case QueryStage::SccRepresentative: return "scc_representative";
    case QueryStage::O1: return "o1";
    case QueryStage::O2: return "o2";
    case QueryStage::O3: return "o3";
    case QueryStage::Fallback: return "fallback";
    }
    return "?";
}

void SvConfig::validate() const {
    if (k < 1) throw ConfigError("k must be >= 1");
    if (c < 1) throw ConfigError("c must be >= 1");
    if (z < 1) throw ConfigError("z must be >= 1");
    if (variant == SvVariant::SV && c != kNeverAdjust) {
        throw ConfigError("sv never adjusts; c is only valid for sva/svc");
    }
    if (ssr_params.ratio < 0.0 || ssr_params.ratio > 1.0) {
        throw ConfigError("ratio must lie in [0, 1]");
    }
    if (ssr_params.beta < 1) throw ConfigError("beta must be >= 1");
}

SupportiveVertices::SupportiveVertices(DiGraph& g, SvConfig config)
    : g_(g), config_(config), rng_(config.rng_seed) {
    config_.validate();
    support_slot_.assign(g.vertex_count(), kNoSlot);
    if (config_.variant == SvVariant::SVC) {
        rep_map_.assign(g.vertex_count(), kNoVertex);
    }
    select_initial();
}

void SupportiveVertices::add_support(VertexId v) {
    support_slot_[v] = static_cast<std::uint32_t>(supports_.size());
    SupportPair pair;
    pair.v = v;
    pair.fwd = make_ssr_engine(config_.ssr_kind, g_, v, Direction::Forward,
                               config_.ssr_params);
    pair.bwd = make_ssr_engine(config_.ssr_kind, g_, v, Direction::Reverse,
                               config_.ssr_params);
    supports_.push_back(std::move(pair));
    stats_.peak_supports = std::max<std::uint64_t>(stats_.peak_supports, supports_.size());
}

void SupportiveVertices::drop_all_supports() {
    for (const SupportPair& p : supports_) {
        stats_.recompute_retired += p.fwd->counters().recomputations +
                                    p.bwd->counters().recomputations;
        support_slot_[p.v] = kNoSlot;
    }
    supports_.clear();
}

void SupportiveVertices::select_random(std::uint32_t want) {
    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
        if (!g_.is_isolated(v) && !is_supportive(v)) candidates.push_back(v);
    }
    const std::uint32_t take =
        std::min<std::uint32_t>(want, static_cast<std::uint32_t>(candidates.size()));
    for (std::uint32_t i = 0; i < take; ++i) {
        const std::size_t j =
            i + static_cast<std::size_t>(uniform_below(rng_, candidates.size() - i));
        std::swap(candidates[i], candidates[j]);
        add_support(candidates[i]);
    }
}

void SupportiveVertices::select_scc_cover() {
    const SccResult scc = tarjan_scc(g_);
    std::vector<VertexId> low_member(scc.count(), kNoVertex);
    std::vector<VertexId> low_support(scc.count(), kNoVertex);
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
        const std::uint32_t c = scc.component[v];
        if (low_member[c] == kNoVertex) low_member[c] = v;
        if (is_supportive(v) && low_support[c] == kNoVertex) low_support[c] = v;
    }
    bool covered_any = false;
    for (std::uint32_t c = 0; c < scc.count(); ++c) {
        if (scc.size[c] < config_.z) continue;
        covered_any = true;
        if (low_support[c] == kNoVertex) {
            add_support(low_member[c]);
            low_support[c] = low_member[c];
        }
    }
    std::fill(rep_map_.begin(), rep_map_.end(), kNoVertex);
    if (covered_any) {
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            const std::uint32_t c = scc.component[v];
            if (scc.size[c] >= config_.z) rep_map_[v] = low_support[c];
        }
    }
    if (!supports_.empty() || covered_any) return;

    // Every SCC is small: take the lowest-id vertex that is neither a source
    // nor a sink, otherwise fall back to one random non-isolated vertex.
    for (VertexId v = 0; v < g_.vertex_count(); ++v) {
        if (g_.in_degree(v) > 0 && g_.out_degree(v) > 0) {
            add_support(v);
            return;
        }
    }
    select_random(1);
}

void SupportiveVertices::select_initial() {
    if (config_.variant == SvVariant::SVC) {
        select_scc_cover();
        deficit_ = false;
    } else {
        select_random(config_.k);
        deficit_ = supports_.size() < config_.k;
    }
}

bool SupportiveVertices::just_became_non_isolated(VertexId x, VertexId tail,
                                                  VertexId head) const {
    std::uint32_t contribution = 0;
    if (tail == x) ++contribution;
    if (head == x) ++contribution;
    return g_.out_degree(x) + g_.in_degree(x) == contribution && contribution > 0;
}

void SupportiveVertices::repair_deficit(VertexId u, VertexId v) {
    VertexId fresh[2];
    std::size_t fresh_count = 0;
    if (just_became_non_isolated(u, u, v) && !is_supportive(u)) {
        fresh[fresh_count++] = u;
    }
    if (v != u && just_became_non_isolated(v, u, v) && !is_supportive(v)) {
        fresh[fresh_count++] = v;
    }
    while (fresh_count > 0 && supports_.size() < config_.k) {
        const std::size_t pick =
            fresh_count == 1 ? 0 : static_cast<std::size_t>(uniform_below(rng_, fresh_count));
        add_support(fresh[pick]);
        fresh[pick] = fresh[--fresh_count];
    }
    deficit_ = supports_.size() < config_.k;
}

void SupportiveVertices::on_edge_inserted(EdgeId e, VertexId tail, VertexId head) {
    for (const SupportPair& p : supports_) {
        p.fwd->on_insert(e, tail, head);
        p.bwd->on_insert(e, tail, head);
        stats_.engine_notifications += 2;
    }
    if (deficit_ && config_.variant != SvVariant::SVC) {
        repair_deficit(tail, head);
    }
    after_update();
}

void SupportiveVertices::on_edge_deleted(EdgeId e, VertexId tail, VertexId head) {
    for (const SupportPair& p : supports_) {
        p.fwd->on_delete(e, tail, head);
        p.bwd->on_delete(e, tail, head);
        stats_.engine_notifications += 2;
    }
    after_update();
}

void SupportiveVertices::after_update() {
    ++update_counter_;
    if (config_.c != kNeverAdjust && update_counter_ % config_.c == 0) {
        adjust();
    }
}

void SupportiveVertices::adjust() {
    ++stats_.adjustments;
    if (config_.variant == SvVariant::SVA) {
        drop_all_supports();
        select_random(config_.k);
        deficit_ = supports_.size() < config_.k;
        return;
    }
    // SVC: supportive vertices picked earlier stay even when their SCC shrank;
    // the representative map is rebuilt for the currently large SCCs only.
    select_scc_cover();
}

VertexId SupportiveVertices::representative_of(VertexId v) const {
    return rep_map_.empty() ? kNoVertex : rep_map_[v];
}

std::vector<VertexId> SupportiveVertices::support_vertices() const {
    std::vector<VertexId> out;
    out.reserve(supports_.size());
    for (const SupportPair& p : supports_) out.push_back(p.v);
    return out;
}

SvStats SupportiveVertices::stats() const {
    SvStats s = stats_;
    for (const SupportPair& p : supports_) {
        s.recompute_live += p.fwd->counters().recomputations +
                            p.bwd->counters().recomputations;
    }
    return s;
}

std::pair<bool, QueryStage> SupportiveVertices::run_ladder(VertexId s, VertexId t) {
    if (config_.variant == SvVariant::SVC) {
        if (const VertexId r = rep_map_[s]; r != kNoVertex) {
            const SupportPair& p = supports_[support_slot_[r]];
            if (p.fwd->query(s) && p.bwd->query(s)) {
                // s and its representative are still mutually reachable.
                return {p.fwd->query(t), QueryStage::SccRepresentative};
            }
            rep_map_[s] = kNoVertex;
        }
        if (const VertexId r = rep_map_[t]; r != kNoVertex) {
            const SupportPair& p = supports_[support_slot_[r]];
            if (p.fwd->query(t) && p.bwd->query(t)) {
                return {p.bwd->query(s), QueryStage::SccRepresentative};
            }
            rep_map_[t] = kNoVertex;
        }
    }
    if (is_supportive(s)) {
        return {supports_[support_slot_[s]].fwd->query(t), QueryStage::SourceSupportive};
    }
    if (is_supportive(t)) {
        return {supports_[support_slot_[t]].bwd->query(s), QueryStage::TargetSupportive};
    }
    for (const SupportPair& p : supports_) {
        const bool s_reaches_v = p.bwd->query(s);
        const bool v_reaches_t = p.fwd->query(t);
        if (s_reaches_v && v_reaches_t) return {true, QueryStage::O1};
        if (p.fwd->query(s) && !v_reaches_t) return {false, QueryStage::O2};
        if (!s_reaches_v && p.bwd->query(t)) return {false, QueryStage::O3};
    }
    return {static_query(config_.fallback, g_, scratch_, s, t), QueryStage::Fallback};
}

std::pair<bool, QueryStage> SupportiveVertices::query(VertexId s, VertexId t) {
    if (s >= g_.vertex_count() || t >= g_.vertex_count()) {
        throw std::out_of_range("query endpoint out of range");
    }
    const auto answer = run_ladder(s, t);
    ++histogram_[static_cast<std::size_t>(answer.second)];
    return answer;
}

} // namespace svreach
