#include "svreach/bench.hpp"

#include <ostream>
#include <sstream>

#include "svreach/errors.hpp"

namespace svreach {

namespace {

using Clock = std::chrono::steady_clock;

class StaticAlgorithm final : public TcAlgorithm {
  public:
    StaticAlgorithm(StaticAlgo algo, DiGraph& g) : algo_(algo), g_(g) {}
    void on_insert(EdgeId, VertexId, VertexId) override {}
    void on_delete(EdgeId, VertexId, VertexId) override {}
    bool query(VertexId s, VertexId t) override {
        return static_query(algo_, g_, scratch_, s, t);
    }
    bool has_update_work() const override { return false; }

  private:
    StaticAlgo algo_;
    DiGraph& g_;
    SearchScratch scratch_;
};

class SupportiveAlgorithm final : public TcAlgorithm {
  public:
    SupportiveAlgorithm(const SvConfig& config, DiGraph& g) : sv_(g, config) {}
    void on_insert(EdgeId e, VertexId u, VertexId v) override {
        sv_.on_edge_inserted(e, u, v);
    }
    void on_delete(EdgeId e, VertexId u, VertexId v) override {
        sv_.on_edge_deleted(e, u, v);
    }
    bool query(VertexId s, VertexId t) override { return sv_.query(s, t).first; }
    bool has_update_work() const override { return true; }
    SupportiveVertices* supportive() override { return &sv_; }

  private:
    SupportiveVertices sv_;
};

const char* static_algo_name(StaticAlgo algo) {
    switch (algo) {
    case StaticAlgo::Bfs: return "bfs";
    case StaticAlgo::Dfs: return "dfs";
    case StaticAlgo::Dbfs: return "dbfs";
    case StaticAlgo::BiBfs: return "bibfs";
    }
    return "?";
}

std::optional<StaticAlgo> static_algo_from(const std::string& name) {
    if (name == "bfs") return StaticAlgo::Bfs;
    if (name == "dfs") return StaticAlgo::Dfs;
    if (name == "dbfs") return StaticAlgo::Dbfs;
    if (name == "bibfs") return StaticAlgo::BiBfs;
    return std::nullopt;
}

} // namespace

std::string AlgoChoice::label() const {
    if (!is_supportive()) return name;
    std::ostringstream out;
    out << name << '(';
    if (name == "svc") {
        out << "z=" << sv.z;
    } else {
        out << "k=" << sv.k;
    }
    if (name != "sv") {
        out << ",c=";
        if (sv.c == kNeverAdjust) {
            out << "inf";
        } else {
            out << sv.c;
        }
    }
    out << ",ssr=" << (sv.ssr_kind == SsrKind::SI ? "si" : "ses");
    out << ",ratio=" << sv.ssr_params.ratio << ",beta=" << sv.ssr_params.beta;
    out << ",fallback=" << static_algo_name(sv.fallback);
    out << ",seed=" << sv.rng_seed << ')';
    return out.str();
}

std::unique_ptr<TcAlgorithm> make_algorithm(const AlgoChoice& choice, DiGraph& g) {
    if (auto algo = static_algo_from(choice.name)) {
        return std::make_unique<StaticAlgorithm>(*algo, g);
    }
    if (choice.is_supportive()) {
        SvConfig config = choice.sv;
        config.variant = choice.name == "sv"    ? SvVariant::SV
                         : choice.name == "sva" ? SvVariant::SVA
                                                : SvVariant::SVC;
        return std::make_unique<SupportiveAlgorithm>(config, g);
    }
    throw ConfigError("unknown algorithm '" + choice.name + "'");
}

RunMetrics run_benchmark(const Instance& inst, const AlgoChoice& choice,
                         std::chrono::nanoseconds timeout, std::ostream* trace) {
    RunMetrics metrics;
    metrics.instance_name = inst.meta.name;
    metrics.n = inst.n;
    metrics.algo = choice.label();
    metrics.seed = choice.sv.rng_seed;

    const auto run_start = Clock::now();
    DiGraph g(static_cast<VertexId>(inst.n));
    std::size_t index = 0;
    for (const auto& [u, v] : inst.initial_edges) {
        if (u >= inst.n || v >= inst.n) {
            throw ReplayError("initial edge out of range", index);
        }
        g.insert_edge(u, v);
        ++index;
    }
    metrics.density = g.density();
    std::unique_ptr<TcAlgorithm> algo = make_algorithm(choice, g);
    metrics.init_ns = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - run_start)
            .count());

    const bool time_updates = algo->has_update_work();
    AnswerDigest digest;
    index = 0;
    for (const Operation& op : inst.ops) {
        std::uint64_t op_ns = 0;
        switch (op.tag) {
        case OpTag::Add: {
            const EdgeId e = g.insert_edge(op.a, op.b); // untimed graph work
            if (time_updates) {
                const auto t0 = Clock::now();
                algo->on_insert(e, op.a, op.b);
                op_ns = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0)
                        .count());
                metrics.update_ns += op_ns;
            }
            ++metrics.adds;
            break;
        }
        case OpTag::Delete: {
            EdgeId e;
            try {
                e = g.delete_edge(op.a, op.b); // untimed graph work
            } catch (const MissingEdgeError& err) {
                throw ReplayError(err.what(), index);
            }
            if (time_updates) {
                const auto t0 = Clock::now();
                algo->on_delete(e, op.a, op.b);
                op_ns = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0)
                        .count());
                metrics.update_ns += op_ns;
            }
            ++metrics.deletes;
            break;
        }
        case OpTag::Query: {
            const auto t0 = Clock::now();
            const bool answer = algo->query(op.a, op.b);
            op_ns = static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0)
                    .count());
            metrics.query_ns += op_ns;
            digest.feed(answer);
            ++metrics.queries;
            break;
        }
        }
        if (trace != nullptr) {
            *trace << index << ' '
                   << (op.tag == OpTag::Add      ? 'a'
                       : op.tag == OpTag::Delete ? 'd'
                                                 : 'q')
                   << ' ' << op_ns << '\n';
        }
        ++index;
        if (timeout > kNoTimeout && Clock::now() - run_start > timeout) {
            metrics.timed_out = true;
            break;
        }
    }

    metrics.answers_digest = digest.value;
    if (SupportiveVertices* sv = algo->supportive()) {
        const SvStats stats = sv->stats();
        metrics.engine_notifications = stats.engine_notifications;
        metrics.recomputes = stats.recomputations();
        metrics.peak_supports = stats.peak_supports;
        metrics.stages = sv->stage_stats();
    }
    return metrics;
}

std::string VerifyReport::to_string() const {
    if (ok) return "ok";
    std::ostringstream out;
    out << "divergence at op " << op_index << ": query(" << s << ", " << t
        << ") expected " << (expected ? "true" : "false") << ", got "
        << (got ? "true" : "false");
    if (stage) {
        out << " (stage " << query_stage_name(*stage) << ')';
    }
    return out.str();
}

VerifyReport verify_with(const Instance& inst, DiGraph& g, TcAlgorithm& algo) {
    VerifyReport report;
    SearchScratch oracle_scratch;
    std::size_t index = 0;
    for (const Operation& op : inst.ops) {
        switch (op.tag) {
        case OpTag::Add: {
            const EdgeId e = g.insert_edge(op.a, op.b);
            algo.on_insert(e, op.a, op.b);
            break;
        }
        case OpTag::Delete: {
            EdgeId e;
            try {
                e = g.delete_edge(op.a, op.b);
            } catch (const MissingEdgeError& err) {
                throw ReplayError(err.what(), index);
            }
            algo.on_delete(e, op.a, op.b);
            break;
        }
        case OpTag::Query: {
            const bool got = algo.query(op.a, op.b);
            const bool expected = bfs_query(g, oracle_scratch, op.a, op.b);
            if (got != expected) {
                report.ok = false;
                report.op_index = index;
                report.s = op.a;
                report.t = op.b;
                report.expected = expected;
                report.got = got;
                if (SupportiveVertices* sv = algo.supportive()) {
                    // Re-walk the ladder to name the rung that answered.
                    report.stage = sv->query(op.a, op.b).second;
                }
                return report;
            }
            break;
        }
        }
        ++index;
    }
    return report;
}

VerifyReport verify_run(const Instance& inst, const AlgoChoice& choice) {
    DiGraph g(static_cast<VertexId>(inst.n));
    std::size_t index = 0;
    for (const auto& [u, v] : inst.initial_edges) {
        if (u >= inst.n || v >= inst.n) {
            throw ReplayError("initial edge out of range", index);
        }
        g.insert_edge(u, v);
        ++index;
    }
    std::unique_ptr<TcAlgorithm> algo = make_algorithm(choice, g);
    return verify_with(inst, g, *algo);
}

void emit_csv(std::span<const RunMetrics> runs, std::ostream& out) {
    out << "instance,n,d,algo,seed,init_ns,update_ns,query_ns,ops_ns,"
           "adds,deletes,queries,engine_notifications,recomputes,peak_supports,"
           "stage_source_supportive,stage_target_supportive,stage_scc_representative,"
           "stage_o1,stage_o2,stage_o3,stage_fallback,timeout\n";
    for (const RunMetrics& m : runs) {
        out << m.instance_name << ',' << m.n << ',' << m.density << ",\"" << m.algo
            << "\"," << m.seed << ',' << m.init_ns << ',' << m.update_ns << ','
            << m.query_ns << ',' << m.update_ns + m.query_ns << ',' << m.adds << ','
            << m.deletes << ',' << m.queries << ',' << m.engine_notifications << ','
            << m.recomputes << ',' << m.peak_supports;
        for (const std::uint64_t count : m.stages) {
            out << ',' << count;
        }
        out << ',' << (m.timed_out ? 1 : 0) << '\n';
    }
}

std::string emit_csv(std::span<const RunMetrics> runs) {
    std::ostringstream out;
    emit_csv(runs, out);
    return std::move(out).str();
}

} // namespace svreach
