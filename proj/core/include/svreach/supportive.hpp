#ifndef SVREACH_SUPPORTIVE_HPP
#define SVREACH_SUPPORTIVE_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "svreach/digraph.hpp"
#include "svreach/ssr.hpp"
#include "svreach/traversal.hpp"

namespace svreach {

enum class SvVariant { SV, SVA, SVC };

/// Which rung of the query ladder produced the answer.
enum class QueryStage : std::uint8_t {
    SourceSupportive = 0, // s itself is supportive
    TargetSupportive,     // t itself is supportive
    SccRepresentative,    // a still-valid SCC representative of s or t (SVC)
    O1,                   // s reaches v and v reaches t -> true
    O2,                   // v reaches s but not t -> false
    O3,                   // t reaches v but s does not -> false
    Fallback,             // static algorithm decided
};
inline constexpr std::size_t kQueryStageCount = 7;

using StageHistogram = std::array<std::uint64_t, kQueryStageCount>;

const char* query_stage_name(QueryStage stage);

/// Period value meaning "never adjust".
inline constexpr std::uint64_t kNeverAdjust = std::numeric_limits<std::uint64_t>::max();

struct SvConfig {
    SvVariant variant = SvVariant::SV;
    std::uint32_t k = 1;              // SV/SVA: target number of supportive vertices
    std::uint64_t c = kNeverAdjust;   // SVA/SVC: updates between adjustments
    std::uint32_t z = 25;             // SVC: minimum SCC size worth a representative
    SsrKind ssr_kind = SsrKind::SES;
    SsrParams ssr_params;
    std::uint64_t rng_seed = 0;
    StaticAlgo fallback = StaticAlgo::BiBfs;

    void validate() const; // throws ConfigError
};

struct SvStats {
    std::uint64_t engine_notifications = 0; // ssr on_insert/on_delete calls made
    std::uint64_t adjustments = 0;          // selection re-runs triggered by c
    std::uint64_t peak_supports = 0;
    std::uint64_t recomputations() const { return recompute_live + recompute_retired; }
    std::uint64_t recompute_live = 0;    // filled in by snapshotting live engines
    std::uint64_t recompute_retired = 0; // counters of engines destroyed by adjustments
};

/// Transitive-closure index built from k supportive vertices, each carrying a
/// forward (R+) and a reverse (R-) reachability engine. Queries walk a fixed
/// ladder: supportive endpoints answer directly, otherwise each supportive
/// vertex v is tried against three membership tests
///   s in R-(v) and t in R+(v)      -> reachable
///   s in R+(v) and t not in R+(v)  -> not reachable
///   t in R-(v) and s not in R-(v)  -> not reachable
/// and a static fallback decides the rest. SVC additionally keeps a
/// vertex-to-representative map over SCCs of size >= z, checked before the
/// ladder and invalidated lazily when a query finds it stale.
///
/// The object observes one graph; drive it either through
/// DiGraph::add_observer or by calling on_edge_inserted/on_edge_deleted
/// directly after each mutation.
class SupportiveVertices final : public GraphObserver {
  public:
    SupportiveVertices(DiGraph& g, SvConfig config);

    void on_edge_inserted(EdgeId e, VertexId tail, VertexId head) override;
    void on_edge_deleted(EdgeId e, VertexId tail, VertexId head) override;

    std::pair<bool, QueryStage> query(VertexId s, VertexId t);

    StageHistogram stage_stats() const { return histogram_; }
    SvStats stats() const;

    std::size_t support_count() const { return supports_.size(); }
    bool is_supportive(VertexId v) const { return support_slot_[v] != kNoSlot; }
    std::vector<VertexId> support_vertices() const;
    /// SVC: current map entry for v, or kNoVertex.
    VertexId representative_of(VertexId v) const;
    bool has_deficit() const { return deficit_; }
    const SvConfig& config() const { return config_; }

  private:
    struct SupportPair {
        VertexId v;
        std::unique_ptr<SsrEngine> fwd; // maintains R+(v)
        std::unique_ptr<SsrEngine> bwd; // maintains R-(v)
    };
    static constexpr std::uint32_t kNoSlot = std::numeric_limits<std::uint32_t>::max();

    void select_initial();
    void select_random(std::uint32_t want);
    void select_scc_cover();
    void add_support(VertexId v);
    void drop_all_supports();
    void after_update();
    void adjust();
    void repair_deficit(VertexId u, VertexId v);
    bool just_became_non_isolated(VertexId x, VertexId tail, VertexId head) const;
    std::pair<bool, QueryStage> run_ladder(VertexId s, VertexId t);

    DiGraph& g_;
    SvConfig config_;
    std::mt19937_64 rng_;
    std::vector<SupportPair> supports_;
    std::vector<std::uint32_t> support_slot_; // per vertex: index into supports_
    std::vector<VertexId> rep_map_;           // SVC only; kNoVertex when absent
    std::uint64_t update_counter_ = 0;
    bool deficit_ = false;
    StageHistogram histogram_{};
    SvStats stats_;
    SearchScratch scratch_;
};

} // namespace svreach

#endif
