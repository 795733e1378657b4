#ifndef SVREACH_ERRORS_HPP
#define SVREACH_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace svreach {

/// Deletion named a (tail, head) pair with no live edge.
struct MissingEdgeError : std::runtime_error {
    MissingEdgeError(std::uint32_t tail, std::uint32_t head)
        : std::runtime_error("no live edge (" + std::to_string(tail) + ", " +
                             std::to_string(head) + ")"),
          tail(tail), head(head) {}
    std::uint32_t tail;
    std::uint32_t head;
};

/// Malformed instance text; line/column are 1-based.
struct ParseError : std::runtime_error {
    ParseError(std::string msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

/// Invalid algorithm or generator configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation stream failed validation; op_index is the offending position.
struct ReplayError : std::runtime_error {
    ReplayError(std::string msg, std::size_t op_index)
        : std::runtime_error("op " + std::to_string(op_index) + ": " + msg),
          op_index(op_index) {}
    std::size_t op_index;
};

} // namespace svreach

#endif
