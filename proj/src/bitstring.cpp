#include "qrngkit/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace qrngkit {

BitString BitString::from_string(std::string_view s) {
    BitString out(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') {
            out.set_bit(i, 1);
        } else if (s[i] != '0') {
            throw std::invalid_argument("BitString::from_string: expected only '0'/'1'");
        }
    }
    return out;
}

BitString BitString::from_bytes(std::vector<uint8_t> bytes) {
    BitString out;
    out.nbits_ = bytes.size() * 8;
    out.bytes_ = std::move(bytes);
    return out;
}

void BitString::set_bit(size_t i, int value) {
    if (i >= nbits_) throw std::out_of_range("BitString::set_bit: index past end");
    const uint8_t mask = static_cast<uint8_t>(1u << (i & 7));
    if (value)
        bytes_[i >> 3] |= mask;
    else
        bytes_[i >> 3] &= static_cast<uint8_t>(~mask);
}

void BitString::push_back(int value) {
    if ((nbits_ & 7) == 0) bytes_.push_back(0);
    ++nbits_;
    if (value) set_bit(nbits_ - 1, 1);
}

void BitString::append(const BitString& other) {
    if ((nbits_ & 7) == 0) {
        // Byte-aligned: splice the raw bytes.
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        nbits_ += other.nbits_;
        return;
    }
    for (size_t i = 0; i < other.nbits_; ++i) push_back(other.bit(i));
}

BitString BitString::slice(size_t first, size_t count) const {
    if (first + count > nbits_) throw std::out_of_range("BitString::slice: range past end");
    BitString out(count);
    if ((first & 7) == 0) {
        const size_t nfull = count / 8;
        for (size_t b = 0; b < nfull; ++b) out.bytes_[b] = bytes_[(first >> 3) + b];
        for (size_t i = nfull * 8; i < count; ++i) out.set_bit(i, bit(first + i));
    } else {
        for (size_t i = 0; i < count; ++i)
            if (bit(first + i)) out.set_bit(i, 1);
    }
    return out;
}

size_t BitString::count_ones() const {
    size_t total = 0;
    for (uint8_t b : bytes_) total += static_cast<size_t>(std::popcount(b));
    return total;
}

std::vector<uint8_t> BitString::to_bytes() const {
    if ((nbits_ & 7) != 0)
        throw std::invalid_argument("BitString::to_bytes: size is not a whole number of bytes");
    return bytes_;
}

std::vector<uint8_t> BitString::unpack() const {
    std::vector<uint8_t> out(nbits_);
    for (size_t i = 0; i < nbits_; ++i) out[i] = static_cast<uint8_t>(bit(i));
    return out;
}

std::string BitString::to_string() const {
    std::string out(nbits_, '0');
    for (size_t i = 0; i < nbits_; ++i)
        if (bit(i)) out[i] = '1';
    return out;
}

}  // namespace qrngkit
