#include "qrngkit/bitfile.hpp"

#include <array>
#include <cstring>
#include <fstream>

#include "qrngkit/errors.hpp"

namespace qrngkit {

namespace {

void put_u32le(uint8_t* out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out[i] = static_cast<uint8_t>(v >> (8 * i));
}

void put_u64le(uint8_t* out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out[i] = static_cast<uint8_t>(v >> (8 * i));
}

uint32_t get_u32le(const uint8_t* in) {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<uint32_t>(in[i]) << (8 * i);
    return v;
}

uint64_t get_u64le(const uint8_t* in) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(in[i]) << (8 * i);
    return v;
}

}  // namespace

void write_bit_file(const std::string& path, const BitString& bits) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);

    std::array<uint8_t, kBitFileHeaderSize> header{};
    std::memcpy(header.data(), kBitFileMagic, 4);
    put_u32le(header.data() + 4, kBitFileVersion);
    put_u64le(header.data() + 8, bits.size());

    out.write(reinterpret_cast<const char*>(header.data()), header.size());
    const auto& payload = bits.bytes();
    out.write(reinterpret_cast<const char*>(payload.data()),
              static_cast<std::streamsize>(payload.size()));
    if (!out) throw IoError("write failed: " + path);
}

BitString read_bit_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);

    std::array<uint8_t, kBitFileHeaderSize> header{};
    in.read(reinterpret_cast<char*>(header.data()), header.size());
    if (in.gcount() != static_cast<std::streamsize>(header.size()))
        throw DataError("bit file shorter than its header: " + path);

    if (std::memcmp(header.data(), kBitFileMagic, 4) != 0)
        throw DataError("bad bit-file magic: " + path);
    const uint32_t version = get_u32le(header.data() + 4);
    if (version != kBitFileVersion)
        throw DataError("unsupported bit-file version " + std::to_string(version) + ": " + path);

    const uint64_t nbits = get_u64le(header.data() + 8);
    const size_t nbytes = static_cast<size_t>((nbits + 7) / 8);
    std::vector<uint8_t> payload(nbytes);
    in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(nbytes));
    if (in.gcount() != static_cast<std::streamsize>(nbytes))
        throw DataError("bit file payload truncated: " + path);

    if ((nbits & 7) != 0) {
        const uint8_t tail_mask = static_cast<uint8_t>(0xFFu << (nbits & 7));
        if ((payload.back() & tail_mask) != 0)
            throw DataError("nonzero padding bits in final byte: " + path);
    }

    BitString out = BitString::from_bytes(std::move(payload));
    return out.slice(0, static_cast<size_t>(nbits));
}

}  // namespace qrngkit
