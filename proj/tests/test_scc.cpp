#include <doctest.h>

#include "support/oracle.hpp"
#include "svreach/digraph.hpp"
#include "svreach/scc.hpp"

using namespace svreach;

namespace {

// Two labelings describe the same partition iff the label pairs agree.
bool same_partition(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
    REQUIRE(a.size() == b.size());
    std::vector<std::uint32_t> a_to_b(a.size(), testsupport::kInfDist);
    std::vector<std::uint32_t> b_to_a(b.size(), testsupport::kInfDist);
    for (std::size_t v = 0; v < a.size(); ++v) {
        if (a_to_b[a[v]] == testsupport::kInfDist) a_to_b[a[v]] = b[v];
        if (b_to_a[b[v]] == testsupport::kInfDist) b_to_a[b[v]] = a[v];
        if (a_to_b[a[v]] != b[v] || b_to_a[b[v]] != a[v]) return false;
    }
    return true;
}

} // namespace

TEST_CASE("cycle plus tail") {
    DiGraph g(3);
    g.insert_edge(0, 1);
    g.insert_edge(1, 0);
    g.insert_edge(1, 2);
    const SccResult scc = tarjan_scc(g);
    CHECK(scc.count() == 2);
    CHECK(scc.component[0] == scc.component[1]);
    CHECK(scc.component[0] != scc.component[2]);
    CHECK(scc.size[scc.component[0]] == 2);
    CHECK(scc.size[scc.component[2]] == 1);
}

TEST_CASE("DAG path gives singletons") {
    DiGraph g(3);
    g.insert_edge(0, 1);
    g.insert_edge(1, 2);
    const SccResult scc = tarjan_scc(g);
    CHECK(scc.count() == 3);
    CHECK(scc.component[0] != scc.component[1]);
    CHECK(scc.component[1] != scc.component[2]);
}

TEST_CASE("matches the mutual-reachability oracle on random graphs") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const std::uint32_t n = 2 + seed % 59;
        testsupport::PairGen gen(seed, n);
        DiGraph g(n);
        testsupport::Oracle oracle(n);
        const std::uint32_t m = static_cast<std::uint32_t>(gen.rng() % (3 * n));
        for (std::uint32_t i = 0; i < m; ++i) {
            const auto [u, v] = gen.edge();
            g.insert_edge(u, v);
            oracle.add(u, v);
        }
        const SccResult scc = tarjan_scc(g);
        CHECK(same_partition(scc.component, oracle.mutual_components()));
        std::uint64_t total = 0;
        for (const std::uint32_t s : scc.size) total += s;
        CHECK(total == n);
    }
}

TEST_CASE("deep path does not overflow the call stack") {
    const VertexId n = 200000;
    DiGraph g(n);
    for (VertexId v = 0; v + 1 < n; ++v) g.insert_edge(v, v + 1);
    g.insert_edge(n - 1, 0); // close the cycle: one giant component
    const SccResult scc = tarjan_scc(g);
    CHECK(scc.count() == 1);
    CHECK(scc.size[0] == n);
}
