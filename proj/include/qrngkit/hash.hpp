#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace qrngkit::pqc {

using Bytes = std::vector<uint8_t>;

Bytes sha256(std::span<const uint8_t> data);
Bytes sha512(std::span<const uint8_t> data);
/// SHAKE XOFs at the output lengths the pre-hash flows use.
Bytes shake128(std::span<const uint8_t> data, size_t out_len);
Bytes shake256(std::span<const uint8_t> data, size_t out_len);

}  // namespace qrngkit::pqc
