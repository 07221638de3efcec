#pragma once

#include <string>

#include "qrngkit/bitstring.hpp"

namespace qrngkit {

// Bit-file layout (little-endian throughout):
//
//   offset 0   4 bytes   magic "QRBF"
//   offset 4   u32       format version (currently 1)
//   offset 8   u64       bit count n
//   offset 16  ceil(n/8) payload bytes; bit i is byte i/8, position i%8
//                        (LSB-first); unused high bits of the last byte are 0
inline constexpr char kBitFileMagic[4] = {'Q', 'R', 'B', 'F'};
inline constexpr uint32_t kBitFileVersion = 1;
inline constexpr size_t kBitFileHeaderSize = 16;

/// Throws IoError on filesystem failures.
void write_bit_file(const std::string& path, const BitString& bits);

/// Throws IoError on filesystem failures and DataError on bad magic,
/// unsupported version, truncated payload, or nonzero padding bits.
BitString read_bit_file(const std::string& path);

}  // namespace qrngkit
