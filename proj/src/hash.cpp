#include "qrngkit/hash.hpp"

#include <stdexcept>

#include <openssl/evp.h>

namespace qrngkit::pqc {

namespace {

Bytes evp_digest(const EVP_MD* md, std::span<const uint8_t> data) {
    Bytes out(EVP_MAX_MD_SIZE);
    unsigned int out_len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &out_len, md, nullptr) != 1)
        throw std::runtime_error("EVP_Digest failed");
    out.resize(out_len);
    return out;
}

Bytes evp_xof(const EVP_MD* md, std::span<const uint8_t> data, size_t out_len) {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr) throw std::runtime_error("EVP_MD_CTX_new failed");
    Bytes out(out_len);
    const bool ok = EVP_DigestInit_ex(ctx, md, nullptr) == 1 &&
                    EVP_DigestUpdate(ctx, data.data(), data.size()) == 1 &&
                    EVP_DigestFinalXOF(ctx, out.data(), out_len) == 1;
    EVP_MD_CTX_free(ctx);
    if (!ok) throw std::runtime_error("SHAKE digest failed");
    return out;
}

}  // namespace

Bytes sha256(std::span<const uint8_t> data) { return evp_digest(EVP_sha256(), data); }

Bytes sha512(std::span<const uint8_t> data) { return evp_digest(EVP_sha512(), data); }

Bytes shake128(std::span<const uint8_t> data, size_t out_len) {
    return evp_xof(EVP_shake128(), data, out_len);
}

Bytes shake256(std::span<const uint8_t> data, size_t out_len) {
    return evp_xof(EVP_shake256(), data, out_len);
}

}  // namespace qrngkit::pqc
