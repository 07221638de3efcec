#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qrngkit {

/// Packed sequence of bits. Bit i lives in byte i/8 at position i%8
/// (LSB-first), matching the on-disk bit-file layout. Unused high bits of
/// the final byte are kept zero.
class BitString {
public:
    BitString() = default;
    explicit BitString(size_t nbits) : bytes_((nbits + 7) / 8, 0), nbits_(nbits) {}

    /// Parses "0101..."; anything but '0'/'1' is rejected.
    static BitString from_string(std::string_view s);

    /// Wraps whole bytes; the resulting length is 8 * bytes.size().
    static BitString from_bytes(std::vector<uint8_t> bytes);

    size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    int bit(size_t i) const { return (bytes_[i >> 3] >> (i & 7)) & 1; }
    void set_bit(size_t i, int value);

    void push_back(int value);
    void append(const BitString& other);

    /// Bits [first, first + count).
    BitString slice(size_t first, size_t count) const;

    size_t count_ones() const;
    size_t count_zeros() const { return nbits_ - count_ones(); }

    /// Backing bytes (ceil(size()/8) of them, trailing bits zero).
    const std::vector<uint8_t>& bytes() const { return bytes_; }

    /// The packed bytes of a whole-byte string; throws std::invalid_argument
    /// if size() is not a multiple of 8.
    std::vector<uint8_t> to_bytes() const;

    /// One byte per bit (0 or 1), for algorithms that index bits heavily.
    std::vector<uint8_t> unpack() const;

    std::string to_string() const;

    bool operator==(const BitString& other) const {
        return nbits_ == other.nbits_ && bytes_ == other.bytes_;
    }

private:
    std::vector<uint8_t> bytes_;
    size_t nbits_ = 0;
};

}  // namespace qrngkit
