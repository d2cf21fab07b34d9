#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace incr {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// API misuse: stale or foreign node ids, ref_set on a thunk, mutation from
// inside a running computation.
class usage_error : public error {
public:
    using error::error;
};

// A node was demanded while its own computation was still running.
class cycle_error : public error {
public:
    using error::error;
};

// Evaluation failure: unknown cell, division by zero.
class eval_error : public error {
public:
    using error::error;
};

// Formula syntax error. position() is the 1-based column in the input.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error("syntax error at column " + std::to_string(position) + ": " + what),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace incr
