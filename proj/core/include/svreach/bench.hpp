#ifndef SVREACH_BENCH_HPP
#define SVREACH_BENCH_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "svreach/instance.hpp"
#include "svreach/supportive.hpp"
#include "svreach/traversal.hpp"

namespace svreach {

/// Uniform driver interface over everything the harness can race: the static
/// traversals (whose update handlers do no work at all) and the supportive
/// vertices family.
class TcAlgorithm {
  public:
    virtual ~TcAlgorithm() = default;
    virtual void on_insert(EdgeId e, VertexId tail, VertexId head) = 0;
    virtual void on_delete(EdgeId e, VertexId tail, VertexId head) = 0;
    virtual bool query(VertexId s, VertexId t) = 0;
    /// Static algorithms return false; the harness then skips update timing
    /// entirely, keeping their update totals at exactly zero.
    virtual bool has_update_work() const = 0;
    virtual SupportiveVertices* supportive() { return nullptr; }
};

struct AlgoChoice {
    std::string name = "bfs"; // bfs | dfs | dbfs | bibfs | sv | sva | svc
    SvConfig sv;              // used by the sv family only

    bool is_supportive() const {
        return name == "sv" || name == "sva" || name == "svc";
    }
    /// e.g. "sv(k=1,ssr=ses,ratio=0.25,beta=5,fallback=bibfs)"
    std::string label() const;
};

/// Binds the chosen algorithm to a graph; throws ConfigError on unknown names
/// or invalid parameter combinations.
std::unique_ptr<TcAlgorithm> make_algorithm(const AlgoChoice& choice, DiGraph& g);

/// Order-sensitive FNV-style hash over the stream of query answers.
struct AnswerDigest {
    std::uint64_t value = 1469598103934665603ull;
    void feed(bool answer) {
        value ^= answer ? 0x9eu : 0x31u;
        value *= 1099511628211ull;
    }
};

struct RunMetrics {
    std::string instance_name;
    std::uint64_t n = 0;
    double density = 0.0; // of the initial graph
    std::string algo;
    std::uint64_t seed = 0;

    std::uint64_t init_ns = 0;   // initial edges + algorithm initialization
    std::uint64_t update_ns = 0; // algorithm-only time across updates
    std::uint64_t query_ns = 0;  // algorithm-only time across queries
    std::uint64_t adds = 0;
    std::uint64_t deletes = 0;
    std::uint64_t queries = 0;
    std::uint64_t engine_notifications = 0;
    std::uint64_t recomputes = 0;
    std::uint64_t peak_supports = 0;
    StageHistogram stages{};
    bool timed_out = false;
    std::uint64_t answers_digest = 0;
};

inline constexpr std::chrono::nanoseconds kNoTimeout{0};

/// Replays the instance against one algorithm with the timing discipline:
/// graph mutation is untimed, only the algorithm's notification or query call
/// is measured, one operation at a time. A positive timeout stops the run
/// after the operation during which it expired and flags the metrics.
RunMetrics run_benchmark(const Instance& inst, const AlgoChoice& choice,
                         std::chrono::nanoseconds timeout = kNoTimeout,
                         std::ostream* trace = nullptr);

struct VerifyReport {
    bool ok = true;
    std::size_t op_index = 0;
    VertexId s = 0;
    VertexId t = 0;
    bool expected = false;
    bool got = false;
    std::optional<QueryStage> stage; // sv family only
    std::string to_string() const;
};

/// Runs the algorithm and a per-query BFS oracle in lockstep; reports the
/// first divergence or success.
VerifyReport verify_run(const Instance& inst, const AlgoChoice& choice);

/// Same, but against a caller-supplied algorithm already bound to `g`;
/// lets tests wrap or corrupt the algorithm under verification.
VerifyReport verify_with(const Instance& inst, DiGraph& g, TcAlgorithm& algo);

/// One header plus one row per run, stable column order.
void emit_csv(std::span<const RunMetrics> runs, std::ostream& out);
std::string emit_csv(std::span<const RunMetrics> runs);

} // namespace svreach

#endif
