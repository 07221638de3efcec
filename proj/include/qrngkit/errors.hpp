#pragma once

#include <stdexcept>

namespace qrngkit {

// A file or stream could not be opened, read, or written.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input data is malformed, truncated, or too short for the requested
// operation (distinct from bad caller arguments, which use
// std::invalid_argument).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qrngkit
