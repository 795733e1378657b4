#ifndef SVREACH_INSTANCE_HPP
#define SVREACH_INSTANCE_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "svreach/digraph.hpp"

namespace svreach {

enum class OpTag : std::uint8_t { Add, Delete, Query };

struct Operation {
    OpTag tag;
    VertexId a;
    VertexId b;
    bool operator==(const Operation&) const = default;
};

struct InstanceMeta {
    std::string name;
    std::uint64_t seed = 0;
    std::string params; // free-form generation parameters, e.g. "er d=5"
};

/// A dynamic-reachability workload: an initial graph over a fixed vertex set
/// followed by a typed stream of updates and queries.
///
/// Canonical text form (UTF-8, LF, whitespace-separated decimal ids):
///
///     n <vertex-count>
///     e <u> <v>          zero or more initial edges
///                        blank separator line
///     a <u> <v>          insert edge
///     d <u> <v>          delete one live (u, v) edge
///     q <s> <t>          reachability query
///
/// Lines starting with '#' are ignored on input and never written.
struct Instance {
    std::uint64_t n = 0;
    std::vector<std::pair<VertexId, VertexId>> initial_edges;
    std::vector<Operation> ops;
    InstanceMeta meta;

    /// Structural equality; meta is bookkeeping and not compared.
    bool operator==(const Instance& other) const {
        return n == other.n && initial_edges == other.initial_edges && ops == other.ops;
    }
};

/// Parses the canonical text form; throws ParseError with 1-based line and
/// column positions. `name` seeds meta.name.
Instance parse_instance(std::istream& in, std::string name = "");

void write_instance(const Instance& inst, std::ostream& out);
std::string write_instance(const Instance& inst);

/// Reads a file that may be gzip-compressed (detected by content, not name).
Instance load_instance(const std::filesystem::path& path);
void save_instance(const Instance& inst, const std::filesystem::path& path);

/// Replays initial edges and the op stream against an edge multiset; throws
/// ReplayError at the first deletion that names no live edge and ParseError
/// style range errors for out-of-range ids.
void validate_replay(const Instance& inst);

/// Same check, but streamed straight off the (possibly gzipped) file without
/// materializing the op list; use for instances larger than memory.
void validate_replay_file(const std::filesystem::path& path);

struct ShuffleResult {
    Instance instance;
    std::uint64_t repairs = 0; // deletions swapped behind their matching add
};

/// Permutes updates uniformly among update positions, keeping every query at
/// its position. Deletions that would precede their matching insertion are
/// repaired by swapping the two; the result always replays cleanly.
ShuffleResult shuffle_updates(const Instance& inst, std::uint64_t seed);

struct OpMix {
    std::uint32_t add_pct = 33;
    std::uint32_t del_pct = 33;
    std::uint32_t query_pct = 34;
};

/// Random dynamic instance: floor(density*n) uniform initial edges, then
/// `sigma` operations in batches of `batch` same-tag operations whose tags
/// realize the mix exactly up to rounding, in seeded-random batch order.
/// Insert and query endpoints are uniform ordered pairs (loops and parallels
/// allowed); deletions sample uniformly from the live edge multiset. A
/// deletion batch drawn while the graph is empty is re-drawn as a later
/// non-deletion batch.
Instance generate_er(std::uint64_t n, double density, std::uint64_t sigma,
                     OpMix mix, std::uint32_t batch, std::uint64_t seed);

} // namespace svreach

#endif
