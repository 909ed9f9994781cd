#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclemass {

/// Malformed input text (graph6 strings, mass files, blow-up specs).
/// `offset` is the byte offset of the first bad character, or the line
/// number for line-oriented files (see `line_based`).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t offset, bool line_based = false)
        : std::runtime_error(msg + (line_based ? " (line " : " (byte offset ")
                             + std::to_string(offset) + ")"),
          offset_(offset), line_based_(line_based) {}

    std::size_t offset() const { return offset_; }
    bool line_based() const { return line_based_; }

private:
    std::size_t offset_;
    bool line_based_;
};

/// Well-formed input that violates a data invariant (weights summing to the
/// wrong total, negative weights, duplicate edges, ...).
class data_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ascent step requested on a mass whose support carries no m-cycle (beta = 0).
class dead_support_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cyclemass
