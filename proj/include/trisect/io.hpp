#pragma once

// Text format for diagrams:
//
//   tris v1
//   genus <g>
//   alpha
//   <g lines of 2g integers, coordinates x1..xg y1..yg>
//   beta
//   ...
//   gamma
//   ...
//
// '#' starts a comment; blank lines are ignored.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "trisect/diagram.hpp"

namespace trisect {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    /// 1-based; 0 when the error is at end of input.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

TrisectionDiagram parse_diagram(std::string_view text);

/// Canonical form: single spaces, no comments, trailing newline.
std::string serialize_diagram(const TrisectionDiagram& d);

/// Whitespace-separated integer rows, one per line, with the same comment
/// and blank-line rules. All rows must have equal length.
IntMatrix parse_matrix(std::string_view text);

} // namespace trisect
