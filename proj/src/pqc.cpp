#include "qrngkit/pqc.hpp"

#include <array>
#include <stdexcept>

namespace qrngkit::pqc {

// ---------------------------------------------------------------------------
// Parameter table

namespace {

constexpr std::array<SlhParamSet, 12> kSlhParams = {{
    {"SLH-DSA-SHA2-128s", 16, 128, 1},
    {"SLH-DSA-SHAKE-128s", 16, 128, 1},
    {"SLH-DSA-SHA2-128f", 16, 128, 1},
    {"SLH-DSA-SHAKE-128f", 16, 128, 1},
    {"SLH-DSA-SHA2-192s", 24, 192, 3},
    {"SLH-DSA-SHAKE-192s", 24, 192, 3},
    {"SLH-DSA-SHA2-192f", 24, 192, 3},
    {"SLH-DSA-SHAKE-192f", 24, 192, 3},
    {"SLH-DSA-SHA2-256s", 32, 256, 5},
    {"SLH-DSA-SHAKE-256s", 32, 256, 5},
    {"SLH-DSA-SHA2-256f", 32, 256, 5},
    {"SLH-DSA-SHAKE-256f", 32, 256, 5},
}};

constexpr std::array<uint8_t, 11> kOidSha256 = {0x06, 0x09, 0x60, 0x86, 0x48, 0x01,
                                                0x65, 0x03, 0x04, 0x02, 0x01};
constexpr std::array<uint8_t, 11> kOidSha512 = {0x06, 0x09, 0x60, 0x86, 0x48, 0x01,
                                                0x65, 0x03, 0x04, 0x02, 0x03};
constexpr std::array<uint8_t, 11> kOidShake128 = {0x06, 0x09, 0x60, 0x86, 0x48, 0x01,
                                                  0x65, 0x03, 0x04, 0x02, 0x0B};
constexpr std::array<uint8_t, 11> kOidShake256 = {0x06, 0x09, 0x60, 0x86, 0x48, 0x01,
                                                  0x65, 0x03, 0x04, 0x02, 0x0C};

}  // namespace

std::span<const SlhParamSet> slh_parameter_sets() { return kSlhParams; }

const SlhParamSet* find_slh_params(std::string_view name) {
    for (const SlhParamSet& p : kSlhParams)
        if (p.name == name) return &p;
    return nullptr;
}

std::string_view to_string(PreHash ph) {
    switch (ph) {
        case PreHash::sha256: return "SHA-256";
        case PreHash::sha512: return "SHA-512";
        case PreHash::shake128: return "SHAKE128";
        case PreHash::shake256: return "SHAKE256";
    }
    return "?";
}

std::optional<PreHash> pre_hash_from_name(std::string_view name) {
    if (name == "SHA-256" || name == "sha256") return PreHash::sha256;
    if (name == "SHA-512" || name == "sha512") return PreHash::sha512;
    if (name == "SHAKE128" || name == "shake128") return PreHash::shake128;
    if (name == "SHAKE256" || name == "shake256") return PreHash::shake256;
    return std::nullopt;
}

std::span<const uint8_t> pre_hash_oid(PreHash ph) {
    switch (ph) {
        case PreHash::sha256: return kOidSha256;
        case PreHash::sha512: return kOidSha512;
        case PreHash::shake128: return kOidShake128;
        case PreHash::shake256: return kOidShake256;
    }
    throw std::invalid_argument("pre_hash_oid: unknown pre-hash function");
}

Bytes pre_hash_digest(PreHash ph, std::span<const uint8_t> message) {
    switch (ph) {
        case PreHash::sha256: return sha256(message);
        case PreHash::sha512: return sha512(message);
        case PreHash::shake128: return shake128(message, 32);
        case PreHash::shake256: return shake256(message, 64);
    }
    throw std::invalid_argument("pre_hash_digest: unknown pre-hash function");
}

// ---------------------------------------------------------------------------
// SeedBundle

const BitString* SeedBundle::find(std::string_view role) const {
    for (const Entry& e : entries)
        if (e.role == role) return &e.bits;
    return nullptr;
}

uint64_t SeedBundle::total_bits() const {
    uint64_t total = 0;
    for (const Entry& e : entries) total += e.bits.size();
    return total;
}

// ---------------------------------------------------------------------------
// MockBackend

namespace {

std::string hex_encode(const Bytes& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        out.push_back(digits[b >> 4]);
        out.push_back(digits[b & 0xF]);
    }
    return out;
}

void frame_append(Bytes& buf, std::string_view s) {
    const uint64_t len = s.size();
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<uint8_t>(len >> (8 * i)));
    buf.insert(buf.end(), s.begin(), s.end());
}

void frame_append(Bytes& buf, const Bytes& b) {
    const uint64_t len = b.size();
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<uint8_t>(len >> (8 * i)));
    buf.insert(buf.end(), b.begin(), b.end());
}

}  // namespace

Bytes MockBackend::derive(std::string_view function, std::string_view component,
                          std::span<const NamedBytes> inputs) const {
    Bytes buf;
    frame_append(buf, function);
    frame_append(buf, component);
    for (const NamedBytes& in : inputs) {
        frame_append(buf, in.name);
        frame_append(buf, in.value);
    }
    return sha256(buf);
}

MockBackend::Call& MockBackend::record(std::string function, std::vector<NamedBytes> inputs) {
    transcript_.push_back(Call{std::move(function), std::move(inputs), {}});
    return transcript_.back();
}

MlkemKeyPair MockBackend::mlkem_keygen_internal(const Bytes& d, const Bytes& z) {
    Call& call = record("mlkem_keygen_internal", {{"d", d}, {"z", z}});
    MlkemKeyPair out{derive(call.function, "ek", call.inputs),
                     derive(call.function, "dk", call.inputs)};
    call.outputs = {{"ek", out.ek}, {"dk", out.dk}};
    return out;
}

EncapsResult MockBackend::mlkem_encaps_internal(const Bytes& ek, const Bytes& m) {
    Call& call = record("mlkem_encaps_internal", {{"ek", ek}, {"m", m}});
    EncapsResult out{derive(call.function, "K", call.inputs),
                     derive(call.function, "c", call.inputs)};
    call.outputs = {{"K", out.shared_secret}, {"c", out.ciphertext}};
    return out;
}

MldsaKeyPair MockBackend::mldsa_keygen_internal(const Bytes& xi) {
    Call& call = record("mldsa_keygen_internal", {{"xi", xi}});
    MldsaKeyPair out{derive(call.function, "pk", call.inputs),
                     derive(call.function, "sk", call.inputs)};
    call.outputs = {{"pk", out.pk}, {"sk", out.sk}};
    return out;
}

Bytes MockBackend::mldsa_sign_internal(const Bytes& m_prime, const Bytes& sk, const Bytes& rnd) {
    Call& call = record("mldsa_sign_internal", {{"m_prime", m_prime}, {"sk", sk}, {"rnd", rnd}});
    Bytes sig = derive(call.function, "sig", call.inputs);
    call.outputs = {{"sig", sig}};
    return sig;
}

SlhKeyPair MockBackend::slh_keygen_internal(const Bytes& sk_seed, const Bytes& sk_prf,
                                            const Bytes& pk_seed) {
    Call& call = record("slh_keygen_internal",
                        {{"SK.seed", sk_seed}, {"SK.prf", sk_prf}, {"PK.seed", pk_seed}});
    SlhKeyPair out{derive(call.function, "SK", call.inputs),
                   derive(call.function, "PK", call.inputs)};
    call.outputs = {{"SK", out.sk}, {"PK", out.pk}};
    return out;
}

Bytes MockBackend::slh_sign_internal(const Bytes& m_prime, const Bytes& sk, const Bytes& addrnd) {
    Call& call =
        record("slh_sign_internal", {{"m_prime", m_prime}, {"sk", sk}, {"addrnd", addrnd}});
    Bytes sig = derive(call.function, "SIG", call.inputs);
    call.outputs = {{"SIG", sig}};
    return sig;
}

nlohmann::json MockBackend::transcript_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (const Call& call : transcript_) {
        nlohmann::json inputs = nlohmann::json::array();
        for (const NamedBytes& in : call.inputs)
            inputs.push_back({{"name", in.name}, {"hex", hex_encode(in.value)}});
        nlohmann::json outputs = nlohmann::json::array();
        for (const NamedBytes& o : call.outputs)
            outputs.push_back({{"name", o.name}, {"hex", hex_encode(o.value)}});
        out.push_back({{"function", call.function},
                       {"inputs", std::move(inputs)},
                       {"outputs", std::move(outputs)}});
    }
    return out;
}

std::unique_ptr<PqcBackend> mock_backend() { return std::make_unique<MockBackend>(); }

// ---------------------------------------------------------------------------
// Seed-wiring flows

namespace {

constexpr uint64_t kSeedBits256 = 256;

/// One seed draw; returns nullopt on source failure. Successful draws land
/// in `seeds` under their role name.
std::optional<Bytes> draw_seed(EntropySource& source, uint64_t nbits, const char* role,
                               SeedBundle* seeds) {
    std::optional<BitString> bits = source.request(nbits);
    if (!bits) return std::nullopt;
    if (seeds) seeds->entries.push_back({role, *bits});
    return bits->to_bytes();
}

/// M' framing shared by the pure flows: domain || len(ctx) || ctx || M.
Bytes frame_message(uint8_t domain, const Bytes& ctx, const Bytes& message) {
    Bytes m_prime;
    m_prime.reserve(2 + ctx.size() + message.size());
    m_prime.push_back(domain);
    m_prime.push_back(static_cast<uint8_t>(ctx.size()));
    m_prime.insert(m_prime.end(), ctx.begin(), ctx.end());
    m_prime.insert(m_prime.end(), message.begin(), message.end());
    return m_prime;
}

}  // namespace

std::optional<MlkemKeyPair> mlkem_keygen(EntropySource& source, PqcBackend& backend,
                                         SeedBundle* seeds) {
    const auto d = draw_seed(source, kSeedBits256, "d", seeds);
    if (!d) return std::nullopt;
    const auto z = draw_seed(source, kSeedBits256, "z", seeds);
    if (!z) return std::nullopt;
    return backend.mlkem_keygen_internal(*d, *z);
}

std::optional<EncapsResult> mlkem_encaps(EntropySource& source, PqcBackend& backend,
                                         const Bytes& ek, SeedBundle* seeds) {
    const auto m = draw_seed(source, kSeedBits256, "m", seeds);
    if (!m) return std::nullopt;
    return backend.mlkem_encaps_internal(ek, *m);
}

std::optional<MldsaKeyPair> mldsa_keygen(EntropySource& source, PqcBackend& backend,
                                         SeedBundle* seeds) {
    const auto xi = draw_seed(source, kSeedBits256, "xi", seeds);
    if (!xi) return std::nullopt;
    return backend.mldsa_keygen_internal(*xi);
}

std::optional<Bytes> mldsa_sign(EntropySource& source, PqcBackend& backend,
                                const SignRequest& request, const Bytes& sk, SeedBundle* seeds) {
    if (request.context.size() > kMaxContextBytes) return std::nullopt;
    const auto rnd = draw_seed(source, kSeedBits256, "rnd", seeds);
    if (!rnd) return std::nullopt;
    const Bytes m_prime = frame_message(0x00, request.context, request.message);
    return backend.mldsa_sign_internal(m_prime, sk, *rnd);
}

std::optional<SlhKeyPair> slh_keygen(EntropySource& source, PqcBackend& backend,
                                     const SlhParamSet& params, SlhKeygenMode mode,
                                     SeedBundle* seeds) {
    const uint64_t seed_bits = params.seed_bits;
    Bytes sk_seed, sk_prf, pk_seed;
    if (mode == SlhKeygenMode::three_calls) {
        const auto a = draw_seed(source, seed_bits, "SK.seed", seeds);
        if (!a) return std::nullopt;
        const auto b = draw_seed(source, seed_bits, "SK.prf", seeds);
        if (!b) return std::nullopt;
        const auto c = draw_seed(source, seed_bits, "PK.seed", seeds);
        if (!c) return std::nullopt;
        sk_seed = *a;
        sk_prf = *b;
        pk_seed = *c;
    } else {
        std::optional<BitString> all = source.request(3 * seed_bits);
        if (!all) return std::nullopt;
        const BitString s1 = all->slice(0, seed_bits);
        const BitString s2 = all->slice(seed_bits, seed_bits);
        const BitString s3 = all->slice(2 * seed_bits, seed_bits);
        if (seeds) {
            seeds->entries.push_back({"SK.seed", s1});
            seeds->entries.push_back({"SK.prf", s2});
            seeds->entries.push_back({"PK.seed", s3});
        }
        sk_seed = s1.to_bytes();
        sk_prf = s2.to_bytes();
        pk_seed = s3.to_bytes();
    }
    return backend.slh_keygen_internal(sk_seed, sk_prf, pk_seed);
}

std::optional<Bytes> slh_sign(EntropySource& source, PqcBackend& backend,
                              const SignRequest& request, const Bytes& sk,
                              const SlhParamSet& params, SeedBundle* seeds) {
    if (request.context.size() > kMaxContextBytes) return std::nullopt;
    const auto addrnd = draw_seed(source, params.seed_bits, "addrnd", seeds);
    if (!addrnd) return std::nullopt;
    const Bytes m_prime = frame_message(0x00, request.context, request.message);
    return backend.slh_sign_internal(m_prime, sk, *addrnd);
}

std::optional<Bytes> hash_slh_sign(EntropySource& source, PqcBackend& backend,
                                   const SignRequest& request, const Bytes& sk,
                                   const SlhParamSet& params, SeedBundle* seeds) {
    if (!request.pre_hash)
        throw std::invalid_argument("hash_slh_sign: request carries no pre-hash function");
    if (request.context.size() > kMaxContextBytes) return std::nullopt;
    const auto addrnd = draw_seed(source, params.seed_bits, "addrnd", seeds);
    if (!addrnd) return std::nullopt;

    const Bytes ph_m = pre_hash_digest(*request.pre_hash, request.message);
    const std::span<const uint8_t> oid = pre_hash_oid(*request.pre_hash);
    Bytes m_prime;
    m_prime.reserve(2 + request.context.size() + oid.size() + ph_m.size());
    m_prime.push_back(0x01);
    m_prime.push_back(static_cast<uint8_t>(request.context.size()));
    m_prime.insert(m_prime.end(), request.context.begin(), request.context.end());
    m_prime.insert(m_prime.end(), oid.begin(), oid.end());
    m_prime.insert(m_prime.end(), ph_m.begin(), ph_m.end());
    return backend.slh_sign_internal(m_prime, sk, *addrnd);
}

}  // namespace qrngkit::pqc
