#include <doctest.h>

#include <memory>

#include "support/oracle.hpp"
#include "svreach/digraph.hpp"
#include "svreach/ssr.hpp"

using namespace svreach;

namespace {

void check_against_oracle(const SsrEngine& engine, const testsupport::Oracle& oracle) {
    const bool forward = engine.direction() == Direction::Forward;
    const auto dist = oracle.distances(engine.root(), forward);
    for (std::uint32_t v = 0; v < oracle.n; ++v) {
        const bool expected = dist[v] != testsupport::kInfDist;
        CHECK(engine.query(v) == expected);
        if (engine.kind() == SsrKind::SES) {
            const auto& ses = static_cast<const SesEngine&>(engine);
            CHECK(ses.level(v) == (expected ? dist[v] : ses.unreachable_level()));
        }
    }
}

DiGraph path_graph(VertexId n) {
    DiGraph g(n);
    for (VertexId v = 0; v + 1 < n; ++v) g.insert_edge(v, v + 1);
    return g;
}

} // namespace

TEST_CASE("initialization equals a fresh BFS tree") {
    DiGraph g = path_graph(3);
    for (const SsrKind kind : {SsrKind::SI, SsrKind::SES}) {
        const auto fwd = make_ssr_engine(kind, g, 0, Direction::Forward, {});
        CHECK(fwd->query(0));
        CHECK(fwd->query(1));
        CHECK(fwd->query(2));
        CHECK(fwd->counters().recomputations == 1);

        const auto bwd = make_ssr_engine(kind, g, 2, Direction::Reverse, {});
        CHECK(bwd->query(0)); // everything reaches 2
        CHECK(bwd->query(1));
        CHECK(bwd->query(2));

        const auto tail = make_ssr_engine(kind, g, 2, Direction::Forward, {});
        CHECK(tail->query(2));
        CHECK(!tail->query(0));
        CHECK(!tail->query(1));
    }
    const auto ses = std::make_unique<SesEngine>(g, 0, Direction::Forward, SsrParams{});
    CHECK(ses->level(0) == 0);
    CHECK(ses->level(1) == 1);
    CHECK(ses->level(2) == 2);
}

TEST_CASE("insertions extend and relax") {
    SUBCASE("SI attaches newly reachable vertices") {
        DiGraph g(3);
        g.insert_edge(0, 1);
        SiEngine engine(g, 0, Direction::Forward, {});
        CHECK(!engine.query(2));
        const EdgeId e = g.insert_edge(1, 2);
        engine.on_insert(e, 1, 2);
        CHECK(engine.query(2));
    }
    SUBCASE("SES shortcut drops the level") {
        DiGraph g = path_graph(4);
        SesEngine engine(g, 0, Direction::Forward, {});
        CHECK(engine.level(3) == 3);
        const EdgeId e = g.insert_edge(0, 3);
        engine.on_insert(e, 0, 3);
        CHECK(engine.level(3) == 1);
    }
    SUBCASE("insertion below an unreachable tail is a no-op") {
        DiGraph g(7);
        g.insert_edge(0, 1);
        for (const SsrKind kind : {SsrKind::SI, SsrKind::SES}) {
            const auto engine = make_ssr_engine(kind, g, 0, Direction::Forward, {});
            const EdgeId e = g.insert_edge(5, 6);
            engine->on_insert(e, 5, 6);
            CHECK(engine->query(1));
            CHECK(!engine->query(5));
            CHECK(!engine->query(6));
            g.delete_edge(5, 6);
        }
    }
}

TEST_CASE("deletions repair the tree") {
    SUBCASE("SI rehooks through a surviving edge") {
        DiGraph g(3);
        g.insert_edge(0, 1);
        g.insert_edge(0, 2);
        g.insert_edge(2, 1);
        SsrParams generous;
        generous.ratio = 1.0; // keep the incremental path, never bail out
        SiEngine engine(g, 0, Direction::Forward, generous);
        const EdgeId e = g.delete_edge(0, 1);
        engine.on_delete(e, 0, 1);
        CHECK(engine.query(1));
        CHECK(engine.counters().recomputations == 1); // init only
    }
    SUBCASE("SES keeps the level via a chord") {
        DiGraph g(3);
        g.insert_edge(0, 1);
        g.insert_edge(1, 2);
        g.insert_edge(2, 0);
        g.insert_edge(0, 2);
        SesEngine engine(g, 0, Direction::Forward, {});
        const EdgeId e = g.delete_edge(1, 2);
        engine.on_delete(e, 1, 2);
        CHECK(engine.level(2) == 1);
        CHECK(engine.level(1) == 1);
    }
    SUBCASE("deleting a non-tree edge changes nothing") {
        DiGraph g(3);
        g.insert_edge(0, 1);
        g.insert_edge(0, 1); // parallel; the second one is no tree edge
        for (const SsrKind kind : {SsrKind::SI, SsrKind::SES}) {
            const auto engine = make_ssr_engine(kind, g, 0, Direction::Forward, {});
            const std::uint64_t before = engine->counters().recomputations;
            const EdgeId e = g.delete_edge(0, 1);
            engine->on_delete(e, 0, 1);
            CHECK(engine->query(1));
            CHECK(engine->counters().recomputations == before);
            g.insert_edge(0, 1);
        }
    }
}

TEST_CASE("ratio zero degenerates to recompute-on-tree-deletion") {
    DiGraph g = path_graph(4);
    SsrParams strict;
    strict.ratio = 0.0;
    for (const SsrKind kind : {SsrKind::SI, SsrKind::SES}) {
        const auto engine = make_ssr_engine(kind, g, 0, Direction::Forward, strict);
        const EdgeId e = g.delete_edge(2, 3);
        engine->on_delete(e, 2, 3);
        CHECK(engine->counters().recomputations == 2);
        CHECK(engine->counters().last_delete_aborted);
        CHECK(!engine->query(3));
        g.insert_edge(2, 3);
    }
}

TEST_CASE("exact after every update in randomized runs") {
    // All four kind/direction combinations against the BFS oracle.
    for (const SsrKind kind : {SsrKind::SI, SsrKind::SES}) {
        for (const Direction dir : {Direction::Forward, Direction::Reverse}) {
            for (std::uint64_t seed = 1; seed <= 4; ++seed) {
                const std::uint32_t n = 5 + (seed * 13) % 96;
                testsupport::PairGen gen(seed * 31 + static_cast<int>(kind) * 7 +
                                             static_cast<int>(dir),
                                         n);
                DiGraph g(n);
                testsupport::Oracle oracle(n);
                std::vector<std::pair<VertexId, VertexId>> live;
                for (std::uint32_t i = 0; i < n; ++i) {
                    const auto [u, v] = gen.edge();
                    g.insert_edge(u, v);
                    oracle.add(u, v);
                    live.emplace_back(u, v);
                }
                const auto root = static_cast<VertexId>(gen.vertex());
                SsrParams params;
                params.ratio = (seed % 3) * 0.5; // 0, 0.5, 1
                params.beta = 1 + seed % 5;
                const auto engine = make_ssr_engine(kind, g, root, dir, params);
                check_against_oracle(*engine, oracle);

                for (int step = 0; step < 500; ++step) {
                    const bool insert = live.empty() || (gen.rng() & 1);
                    if (insert) {
                        const auto [u, v] = gen.edge();
                        const EdgeId e = g.insert_edge(u, v);
                        oracle.add(u, v);
                        live.emplace_back(u, v);
                        engine->on_insert(e, u, v);
                    } else {
                        const std::size_t pick = gen.rng() % live.size();
                        const auto [u, v] = live[pick];
                        live[pick] = live.back();
                        live.pop_back();
                        const EdgeId e = g.delete_edge(u, v);
                        oracle.remove(u, v);
                        engine->on_delete(e, u, v);
                    }
                    check_against_oracle(*engine, oracle);
                }
            }
        }
    }
}

TEST_CASE("reverse engine equals forward engine on the reversed graph") {
    for (const SsrKind kind : {SsrKind::SI, SsrKind::SES}) {
        const std::uint32_t n = 40;
        testsupport::PairGen gen(4242 + static_cast<int>(kind), n);
        DiGraph g(n);
        DiGraph mirrored(n);
        std::vector<std::pair<VertexId, VertexId>> live;
        for (std::uint32_t i = 0; i < 2 * n; ++i) {
            const auto [u, v] = gen.edge();
            g.insert_edge(u, v);
            mirrored.insert_edge(v, u);
            live.emplace_back(u, v);
        }
        const VertexId root = 3;
        const auto rev = make_ssr_engine(kind, g, root, Direction::Reverse, {});
        const auto fwd = make_ssr_engine(kind, mirrored, root, Direction::Forward, {});
        for (int step = 0; step < 300; ++step) {
            const bool insert = live.empty() || (gen.rng() & 1);
            if (insert) {
                const auto [u, v] = gen.edge();
                const EdgeId e1 = g.insert_edge(u, v);
                const EdgeId e2 = mirrored.insert_edge(v, u);
                rev->on_insert(e1, u, v);
                fwd->on_insert(e2, v, u);
                live.emplace_back(u, v);
            } else {
                const std::size_t pick = gen.rng() % live.size();
                const auto [u, v] = live[pick];
                live[pick] = live.back();
                live.pop_back();
                const EdgeId e1 = g.delete_edge(u, v);
                const EdgeId e2 = mirrored.delete_edge(v, u);
                rev->on_delete(e1, u, v);
                fwd->on_delete(e2, v, u);
            }
            for (std::uint32_t v = 0; v < n; ++v) {
                CHECK(rev->query(v) == fwd->query(v));
            }
        }
    }
}

TEST_CASE("SES deletion work stays within the threshold bound") {
    const std::uint32_t n = 60;
    testsupport::PairGen gen(99, n);
    DiGraph g(n);
    std::vector<std::pair<VertexId, VertexId>> live;
    for (std::uint32_t i = 0; i < 2 * n; ++i) {
        const auto [u, v] = gen.edge();
        g.insert_edge(u, v);
        live.emplace_back(u, v);
    }
    SsrParams params;
    params.ratio = 0.25;
    params.beta = 3;
    SesEngine engine(g, 0, Direction::Forward, params);
    for (int step = 0; step < 1500 && !live.empty(); ++step) {
        std::uint64_t before = engine.counters().recomputations;
        if (live.size() < n || (gen.rng() & 1)) {
            const auto [u, v] = gen.edge();
            const EdgeId e = g.insert_edge(u, v);
            engine.on_insert(e, u, v);
            live.emplace_back(u, v);
        } else {
            const std::size_t pick = gen.rng() % live.size();
            const auto [u, v] = live[pick];
            live[pick] = live.back();
            live.pop_back();
            const EdgeId e = g.delete_edge(u, v);
            engine.on_delete(e, u, v);
            const std::uint64_t bound =
                static_cast<std::uint64_t>(params.beta + 1) * (n + g.edge_count() + 1);
            CHECK(engine.counters().last_delete_processed <= bound);
            if (engine.counters().last_delete_aborted) {
                CHECK(engine.counters().recomputations == before + 1);
            } else {
                CHECK(engine.counters().recomputations == before);
            }
        }
    }
}
