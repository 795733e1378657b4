#ifndef SVREACH_TESTS_ORACLE_HPP
#define SVREACH_TESTS_ORACLE_HPP

// Brute-force reachability oracle for tests. Keeps its own vertex-list
// adjacency and answers by plain BFS, so it shares no code path with the
// library structures it checks.

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace testsupport {

inline constexpr std::uint32_t kInfDist = std::numeric_limits<std::uint32_t>::max();

struct Oracle {
    std::uint32_t n;
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::vector<std::uint32_t>> in;

    explicit Oracle(std::uint32_t n) : n(n), out(n), in(n) {}

    void add(std::uint32_t u, std::uint32_t v) {
        out[u].push_back(v);
        in[v].push_back(u);
    }

    static void erase_one(std::vector<std::uint32_t>& list, std::uint32_t value) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i] == value) {
                list[i] = list.back();
                list.pop_back();
                return;
            }
        }
    }

    void remove(std::uint32_t u, std::uint32_t v) {
        erase_one(out[u], v);
        erase_one(in[v], u);
    }

    std::vector<std::uint32_t> distances(std::uint32_t s, bool forward) const {
        std::vector<std::uint32_t> dist(n, kInfDist);
        std::vector<std::uint32_t> queue;
        dist[s] = 0;
        queue.push_back(s);
        const auto& adj = forward ? out : in;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t v = queue[head];
            for (std::uint32_t w : adj[v]) {
                if (dist[w] == kInfDist) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    }

    std::vector<char> reach_set(std::uint32_t s, bool forward) const {
        std::vector<char> seen(n, 0);
        const auto dist = distances(s, forward);
        for (std::uint32_t v = 0; v < n; ++v) seen[v] = dist[v] != kInfDist;
        return seen;
    }

    bool reaches(std::uint32_t s, std::uint32_t t) const {
        return reach_set(s, true)[t] != 0;
    }

    /// Mutual-reachability partition; component[v] == component[w] iff v and w
    /// reach each other. Quadratic, for small n only.
    std::vector<std::uint32_t> mutual_components() const {
        std::vector<std::vector<char>> reach;
        reach.reserve(n);
        for (std::uint32_t v = 0; v < n; ++v) reach.push_back(reach_set(v, true));
        std::vector<std::uint32_t> component(n, kInfDist);
        std::uint32_t next = 0;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (component[v] != kInfDist) continue;
            component[v] = next;
            for (std::uint32_t w = v + 1; w < n; ++w) {
                if (component[w] == kInfDist && reach[v][w] && reach[w][v]) {
                    component[w] = next;
                }
            }
            ++next;
        }
        return component;
    }
};

/// Deterministic random (u, v) pair stream for building fuzz graphs.
struct PairGen {
    std::mt19937_64 rng;
    std::uint32_t n;
    PairGen(std::uint64_t seed, std::uint32_t n) : rng(seed), n(n) {}
    std::uint32_t vertex() { return static_cast<std::uint32_t>(rng() % n); }
    std::pair<std::uint32_t, std::uint32_t> edge() {
        const std::uint32_t u = vertex();
        return {u, vertex()};
    }
};

} // namespace testsupport

#endif
