// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace varix {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyPath : Error {
    EmptyPath() : Error("path must contain at least one sample") {}
};

struct NonFiniteValue : Error {
    std::size_t index;
    explicit NonFiniteValue(std::size_t i)
        : Error("non-finite sample at index " + std::to_string(i)), index(i) {}
};

struct NonMonotoneTimes : Error {
    std::size_t index;
    explicit NonMonotoneTimes(std::size_t i)
        : Error("times must be strictly increasing; violated at index " +
                std::to_string(i)),
          index(i) {}
};

struct LengthMismatch : Error {
    LengthMismatch(std::size_t lhs, std::size_t rhs)
        : Error("length mismatch: " + std::to_string(lhs) + " vs " +
                std::to_string(rhs)) {}
};

struct IndexOutOfRange : Error {
    IndexOutOfRange(std::size_t index, std::size_t size)
        : Error("index " + std::to_string(index) + " out of range for length " +
                std::to_string(size)) {}
};

struct TooLongForExhaustive : Error {
    explicit TooLongForExhaustive(std::size_t length)
        : Error("exhaustive oracle limited to 15 samples, got " +
                std::to_string(length)) {}
};

struct ToleranceViolated : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t line;
    ParseError(std::size_t line_number, const std::string& what)
        : Error("line " + std::to_string(line_number) + ": " + what),
          line(line_number) {}
};

}  // namespace varix
