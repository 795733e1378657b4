#include <array>
#include <cmath>
#include <sstream>

#include "svreach/errors.hpp"
#include "svreach/instance.hpp"
#include "svreach/rng.hpp"

namespace svreach {

namespace {

/// Largest-remainder split of `total` batches into the three tag quotas.
std::array<std::uint64_t, 3> batch_quotas(std::uint64_t total, OpMix mix) {
    const std::uint32_t pct[3] = {mix.add_pct, mix.del_pct, mix.query_pct};
    std::array<std::uint64_t, 3> quota{};
    std::uint64_t assigned = 0;
    std::uint64_t numerator[3];
    for (int i = 0; i < 3; ++i) {
        quota[i] = total * pct[i] / 100;
        numerator[i] = total * pct[i] % 100;
        assigned += quota[i];
    }
    while (assigned < total) {
        int best = 0;
        for (int i = 1; i < 3; ++i) {
            if (numerator[i] > numerator[best]) best = i;
        }
        ++quota[best];
        numerator[best] = 0;
        ++assigned;
    }
    return quota;
}

} // namespace

Instance generate_er(std::uint64_t n, double density, std::uint64_t sigma,
                     OpMix mix, std::uint32_t batch, std::uint64_t seed) {
    if (n < 1) throw ConfigError("generator needs n >= 1");
    if (batch < 1) throw ConfigError("generator needs batch >= 1");
    if (mix.add_pct + mix.del_pct + mix.query_pct != 100) {
        throw ConfigError("mix percentages must sum to 100");
    }
    if (density < 0.0 || !std::isfinite(density)) {
        throw ConfigError("density must be finite and non-negative");
    }

    std::mt19937_64 rng(seed);
    Instance inst;
    inst.n = n;
    inst.meta.seed = seed;
    {
        std::ostringstream params;
        params << "er d=" << density << " sigma=" << sigma << " mix=" << mix.add_pct
               << ':' << mix.del_pct << ':' << mix.query_pct << " batch=" << batch;
        inst.meta.params = params.str();
    }

    const auto initial_m = static_cast<std::uint64_t>(density * static_cast<double>(n));
    // Live edge multiset mirror; supports uniform sampling and O(1) removal.
    std::vector<std::pair<VertexId, VertexId>> live;
    live.reserve(initial_m);
    inst.initial_edges.reserve(initial_m);
    for (std::uint64_t i = 0; i < initial_m; ++i) {
        const auto u = static_cast<VertexId>(uniform_below(rng, n));
        const auto v = static_cast<VertexId>(uniform_below(rng, n));
        inst.initial_edges.emplace_back(u, v);
        live.emplace_back(u, v);
    }
    if (sigma == 0) return inst;

    // Deal the batch tags from an exact quota deck in seeded-random order, so
    // realized proportions track the mix up to rounding.
    const std::uint64_t batches = (sigma + batch - 1) / batch;
    const auto quota = batch_quotas(batches, mix);
    std::vector<OpTag> deck;
    deck.reserve(batches);
    deck.insert(deck.end(), quota[0], OpTag::Add);
    deck.insert(deck.end(), quota[1], OpTag::Delete);
    deck.insert(deck.end(), quota[2], OpTag::Query);
    fisher_yates_shuffle(deck, rng);

    inst.ops.reserve(sigma);
    std::uint64_t emitted = 0;
    for (std::uint64_t bi = 0; bi < batches && emitted < sigma; ++bi) {
        if (deck[bi] == OpTag::Delete && live.empty()) {
            // Re-draw as a different tag: swap in the next non-deletion batch.
            std::uint64_t j = bi + 1;
            while (j < batches && deck[j] == OpTag::Delete) ++j;
            if (j == batches) break; // only deletions left and nothing to delete
            std::swap(deck[bi], deck[j]);
        }
        const std::uint64_t size = std::min<std::uint64_t>(batch, sigma - emitted);
        for (std::uint64_t i = 0; i < size; ++i) {
            switch (deck[bi]) {
            case OpTag::Add: {
                const auto u = static_cast<VertexId>(uniform_below(rng, n));
                const auto v = static_cast<VertexId>(uniform_below(rng, n));
                inst.ops.push_back({OpTag::Add, u, v});
                live.emplace_back(u, v);
                break;
            }
            case OpTag::Delete: {
                const std::size_t pick =
                    static_cast<std::size_t>(uniform_below(rng, live.size()));
                const auto [u, v] = live[pick];
                live[pick] = live.back();
                live.pop_back();
                inst.ops.push_back({OpTag::Delete, u, v});
                break;
            }
            case OpTag::Query: {
                const auto s = static_cast<VertexId>(uniform_below(rng, n));
                const auto t = static_cast<VertexId>(uniform_below(rng, n));
                inst.ops.push_back({OpTag::Query, s, t});
                break;
            }
            }
            ++emitted;
            if (deck[bi] == OpTag::Delete && live.empty()) break; // batch cut short
        }
    }
    return inst;
}

} // namespace svreach
