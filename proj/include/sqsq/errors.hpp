#ifndef SQSQ_ERRORS_HPP
#define SQSQ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqsq {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bouwkampcode / tablecode text that does not scan.
struct ParseError : Error {
    ParseError(std::size_t position, const std::string& what)
        : Error("parse error at offset " + std::to_string(position) + ": " + what),
          position(position) {}
    std::size_t position;
};

// A code that scans but cannot be laid out as a tiling.
struct PlacementError : Error {
    using Error::Error;
};

// An operation requiring a valid tiling was handed an invalid one.
struct InvalidTiling : Error {
    using Error::Error;
};

// A transform selector that does not fit its slot.
struct BadSelector : Error {
    using Error::Error;
};

// Binary planar_code stream that violates the format.
struct FormatError : Error {
    FormatError(std::size_t offset, const std::string& what)
        : Error("planar_code error at byte " + std::to_string(offset) + ": " + what),
          offset(offset) {}
    std::size_t offset;
};

struct DisconnectedGraph : Error {
    using Error::Error;
};

struct SingularMatrix : Error {
    using Error::Error;
};

// Network solution that fails to lay out; indicates an embedding or
// orientation bug rather than valid data.
struct GeometryError : Error {
    using Error::Error;
};

// Brute-force generator asked to run beyond its practical bounds.
struct ResourceLimit : Error {
    using Error::Error;
};

// Enumeration input whose edge count disagrees with the requested order.
struct ClassOrderError : Error {
    using Error::Error;
};

}  // namespace sqsq

#endif
