#ifndef SVREACH_SCC_HPP
#define SVREACH_SCC_HPP

#include <cstdint>
#include <vector>

#include "svreach/digraph.hpp"

namespace svreach {

struct SccResult {
    std::vector<std::uint32_t> component; // per vertex
    std::vector<std::uint32_t> size;      // per component id
    std::uint32_t count() const { return static_cast<std::uint32_t>(size.size()); }
};

/// Tarjan's algorithm with an explicit stack; safe for graphs with millions
/// of vertices where the recursive version would blow the call stack.
/// Runs in O(n + m). Two vertices share a component id iff they are
/// mutually reachable.
SccResult tarjan_scc(const DiGraph& g);

} // namespace svreach

#endif
