#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "svreach/digraph.hpp"
#include "svreach/errors.hpp"

using namespace svreach;

TEST_CASE("empty graphs") {
    DiGraph g0(0);
    CHECK(g0.vertex_count() == 0);
    CHECK(g0.edge_count() == 0);
    CHECK(g0.density() == 0.0);

    DiGraph g5(5);
    CHECK(g5.edge_count() == 0);
    for (VertexId v = 0; v < 5; ++v) {
        CHECK(g5.out_degree(v) == 0);
        CHECK(g5.in_degree(v) == 0);
        CHECK(g5.is_isolated(v));
    }

    DiGraph big(100000);
    CHECK(big.density() == 0.0);
}

TEST_CASE("insert basics") {
    DiGraph g(2);
    g.insert_edge(0, 1);
    CHECK(g.edge_count() == 1);
    CHECK(g.out_degree(0) == 1);
    CHECK(g.in_degree(1) == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(!g.has_edge(1, 0));

    SUBCASE("loops count on both sides") {
        g.insert_edge(0, 0);
        CHECK(g.out_degree(0) == 2);
        CHECK(g.in_degree(0) == 1);
        g.audit();
    }
    SUBCASE("parallel edges get distinct ids") {
        const EdgeId a = g.insert_edge(0, 1);
        const EdgeId b = g.insert_edge(0, 1);
        CHECK(a != b);
        CHECK(g.edge_count() == 3);
        g.audit();
    }
    SUBCASE("out of range rejected") {
        CHECK_THROWS_AS(g.insert_edge(0, 2), std::out_of_range);
        CHECK_THROWS_AS(g.insert_edge(7, 0), std::out_of_range);
    }
}

TEST_CASE("delete basics") {
    DiGraph g(3);
    g.insert_edge(0, 1);
    g.delete_edge(0, 1);
    CHECK(g.edge_count() == 0);
    CHECK(g.is_isolated(0));

    SUBCASE("one parallel survives; the newer one goes first") {
        const EdgeId first = g.insert_edge(0, 1);
        const EdgeId second = g.insert_edge(0, 1);
        CHECK(g.delete_edge(0, 1) == second);
        CHECK(g.edge_count() == 1);
        CHECK(g.has_edge(0, 1));
        CHECK(g.delete_edge(0, 1) == first);
    }
    SUBCASE("missing edge is an error") {
        g.insert_edge(0, 1);
        CHECK_THROWS_AS(g.delete_edge(1, 0), MissingEdgeError);
        CHECK_THROWS_AS(g.delete_edge(2, 2), MissingEdgeError);
    }
}

TEST_CASE("neighbors iteration") {
    DiGraph g(3);
    g.insert_edge(0, 1);
    g.insert_edge(0, 2);

    std::set<VertexId> outs;
    for (const AdjEntry& a : g.out_edges(0)) outs.insert(a.to);
    CHECK(outs == std::set<VertexId>{1, 2});

    std::set<VertexId> ins;
    for (const AdjEntry& a : g.in_edges(1)) ins.insert(a.to);
    CHECK(ins == std::set<VertexId>{0});

    CHECK(g.out_edges(2).empty());
    CHECK(g.edges(0, Direction::Forward).size() == 2);
    CHECK(g.edges(0, Direction::Reverse).empty());
}

TEST_CASE("observers fire after the mutation") {
    struct Checker : GraphObserver {
        DiGraph* g = nullptr;
        int inserts = 0;
        int deletes = 0;
        void on_edge_inserted(EdgeId, VertexId u, VertexId v) override {
            ++inserts;
            CHECK(g->has_edge(u, v));
        }
        void on_edge_deleted(EdgeId, VertexId u, VertexId v) override {
            ++deletes;
            CHECK(!g->has_edge(u, v));
        }
    };
    DiGraph g(4);
    Checker checker;
    checker.g = &g;
    g.add_observer(&checker);
    g.insert_edge(1, 2);
    g.delete_edge(1, 2);
    CHECK(checker.inserts == 1);
    CHECK(checker.deletes == 1);
    g.remove_observer(&checker);
    g.insert_edge(1, 2);
    CHECK(checker.inserts == 1);
}

TEST_CASE("random interleavings keep the invariants") {
    std::mt19937_64 rng(7);
    DiGraph g(12);
    std::vector<std::pair<VertexId, VertexId>> live;
    std::uint64_t inserted = 0;
    std::uint64_t deleted = 0;
    for (int step = 0; step < 3000; ++step) {
        const bool do_insert = live.empty() || (rng() & 1);
        if (do_insert) {
            const auto u = static_cast<VertexId>(rng() % 12);
            const auto v = static_cast<VertexId>(rng() % 12);
            g.insert_edge(u, v);
            live.emplace_back(u, v);
            ++inserted;
        } else {
            const std::size_t pick = rng() % live.size();
            g.delete_edge(live[pick].first, live[pick].second);
            live[pick] = live.back();
            live.pop_back();
            ++deleted;
        }
        CHECK(g.edge_count() == inserted - deleted);
        if (step % 101 == 0) g.audit();
    }
    g.audit();
}

TEST_CASE("mutations touch O(1) adjacency entries each") {
    const std::uint64_t ops = 1000000;
    DiGraph g(1000);
    std::mt19937_64 rng(11);
    std::vector<std::pair<VertexId, VertexId>> live;
    std::uint64_t performed = 0;
    for (std::uint64_t i = 0; i < ops; ++i) {
        if (live.size() < 100 || (rng() & 1)) {
            const auto u = static_cast<VertexId>(rng() % 1000);
            const auto v = static_cast<VertexId>(rng() % 1000);
            g.insert_edge(u, v);
            live.emplace_back(u, v);
        } else {
            const std::size_t pick = rng() % live.size();
            g.delete_edge(live[pick].first, live[pick].second);
            live[pick] = live.back();
            live.pop_back();
        }
        ++performed;
    }
    // Insertion writes 2 entries, deletion at most 4 including swap fixups.
    CHECK(g.mutation_work().adjacency_writes <= 4 * performed);
}
