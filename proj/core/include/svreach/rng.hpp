#ifndef SVREACH_RNG_HPP
#define SVREACH_RNG_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace svreach {

/// Unbiased draw from [0, bound) by rejection. std::uniform_int_distribution
/// is implementation-defined, which would make seeded outputs differ between
/// standard libraries; this keeps instance files and support choices stable
/// everywhere. bound must be positive.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

template <typename T>
void fisher_yates_shuffle(std::vector<T>& values, std::mt19937_64& rng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(values[i - 1], values[j]);
    }
}

} // namespace svreach

#endif
