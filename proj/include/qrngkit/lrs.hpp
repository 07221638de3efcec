#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "qrngkit/bitstring.hpp"

namespace qrngkit::sp90b {

/// Length of the longest substring that occurs at two distinct start
/// positions (overlapping occurrences count). 0 when nothing repeats.
/// Suffix array + LCP; O(n log^2 n). Requires size >= 2.
size_t lrs_length(std::span<const uint8_t> symbols);

size_t lrs_length(const BitString& group);

}  // namespace qrngkit::sp90b
