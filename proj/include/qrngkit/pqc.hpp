#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qrngkit/bitstring.hpp"
#include "qrngkit/entropy.hpp"
#include "qrngkit/hash.hpp"

namespace qrngkit::pqc {

// ---------------------------------------------------------------------------
// Parameters and request types

/// One row of the SLH-DSA parameter table: seed size n in bytes (8n bits)
/// and the claimed security level.
struct SlhParamSet {
    std::string_view name;
    unsigned n;
    unsigned seed_bits;
    unsigned security_level;
};

/// All twelve SLH-DSA parameter sets: SHA2/SHAKE x 128/192/256 x s/f.
std::span<const SlhParamSet> slh_parameter_sets();

/// Exact-name lookup, e.g. "SLH-DSA-SHAKE-128f"; nullptr when unknown.
const SlhParamSet* find_slh_params(std::string_view name);

enum class PreHash { sha256, sha512, shake128, shake256 };

std::string_view to_string(PreHash ph);
std::optional<PreHash> pre_hash_from_name(std::string_view name);

/// DER-encoded OID (11 bytes) spliced into the pre-hash message frame.
std::span<const uint8_t> pre_hash_oid(PreHash ph);

/// PH(M) at the standard output length: 32 bytes for SHA-256/SHAKE128,
/// 64 for SHA-512/SHAKE256.
Bytes pre_hash_digest(PreHash ph, std::span<const uint8_t> message);

/// A signing request. pre_hash must be set for hash_slh_sign and is ignored
/// by the pure flows. Contexts longer than 255 bytes are rejected by every
/// signing flow before any entropy is drawn.
struct SignRequest {
    Bytes message;
    Bytes context;
    std::optional<PreHash> pre_hash;
};

inline constexpr size_t kMaxContextBytes = 255;

// ---------------------------------------------------------------------------
// Seed material

/// Named seeds in draw order, exactly as handed to the backend.
struct SeedBundle {
    struct Entry {
        std::string role;  // "d", "z", "m", "xi", "rnd", "SK.seed", "SK.prf", "PK.seed", "addrnd"
        BitString bits;
    };
    std::vector<Entry> entries;

    const BitString* find(std::string_view role) const;
    uint64_t total_bits() const;
};

// ---------------------------------------------------------------------------
// Backend interface

struct MlkemKeyPair {
    Bytes ek;  // encapsulation key
    Bytes dk;  // decapsulation key
};

struct EncapsResult {
    Bytes shared_secret;
    Bytes ciphertext;
};

struct MldsaKeyPair {
    Bytes pk;
    Bytes sk;
};

struct SlhKeyPair {
    Bytes sk;
    Bytes pk;
};

/// The FIPS-internal primitives, behind an interface: all randomness enters
/// through the seed parameters, so implementations must be deterministic
/// functions of their inputs. The shipped implementation is MockBackend;
/// an adapter over a real PQC library can slot in here later.
class PqcBackend {
public:
    virtual ~PqcBackend() = default;

    virtual MlkemKeyPair mlkem_keygen_internal(const Bytes& d, const Bytes& z) = 0;
    virtual EncapsResult mlkem_encaps_internal(const Bytes& ek, const Bytes& m) = 0;
    virtual MldsaKeyPair mldsa_keygen_internal(const Bytes& xi) = 0;
    virtual Bytes mldsa_sign_internal(const Bytes& m_prime, const Bytes& sk, const Bytes& rnd) = 0;
    virtual SlhKeyPair slh_keygen_internal(const Bytes& sk_seed, const Bytes& sk_prf,
                                           const Bytes& pk_seed) = 0;
    virtual Bytes slh_sign_internal(const Bytes& m_prime, const Bytes& sk,
                                    const Bytes& addrnd) = 0;
};

/// Deterministic stand-in for the FIPS internals. Every output is a SHA-256
/// transcript digest of (function tag, output component, framed arguments),
/// and every call is recorded, so tests can assert exactly what was invoked
/// and with which seeds.
class MockBackend final : public PqcBackend {
public:
    struct NamedBytes {
        std::string name;
        Bytes value;
    };
    struct Call {
        std::string function;
        std::vector<NamedBytes> inputs;
        std::vector<NamedBytes> outputs;
    };

    MlkemKeyPair mlkem_keygen_internal(const Bytes& d, const Bytes& z) override;
    EncapsResult mlkem_encaps_internal(const Bytes& ek, const Bytes& m) override;
    MldsaKeyPair mldsa_keygen_internal(const Bytes& xi) override;
    Bytes mldsa_sign_internal(const Bytes& m_prime, const Bytes& sk, const Bytes& rnd) override;
    SlhKeyPair slh_keygen_internal(const Bytes& sk_seed, const Bytes& sk_prf,
                                   const Bytes& pk_seed) override;
    Bytes slh_sign_internal(const Bytes& m_prime, const Bytes& sk, const Bytes& addrnd) override;

    const std::vector<Call>& transcript() const { return transcript_; }
    size_t call_count() const { return transcript_.size(); }
    void clear_transcript() { transcript_.clear(); }

    /// Hex-encoded transcript: [{"function", "inputs": [{"name","hex"}],
    /// "outputs": [{"name","hex"}]}, ...] — the golden-file format.
    nlohmann::json transcript_json() const;

private:
    Bytes derive(std::string_view function, std::string_view component,
                 std::span<const NamedBytes> inputs) const;
    Call& record(std::string function, std::vector<NamedBytes> inputs);

    std::vector<Call> transcript_;
};

std::unique_ptr<PqcBackend> mock_backend();

// ---------------------------------------------------------------------------
// Seed-wiring flows. Each draws its seeds from the source in the listed
// order, returns nullopt (⊥) if any draw fails or the request is invalid,
// and only then calls the backend. `seeds`, when given, receives the drawn
// material.

/// Draws d then z (256 bits each). Consumes 512 bits.
std::optional<MlkemKeyPair> mlkem_keygen(EntropySource& source, PqcBackend& backend,
                                         SeedBundle* seeds = nullptr);

/// Draws m (256 bits). Consumes 256 bits.
std::optional<EncapsResult> mlkem_encaps(EntropySource& source, PqcBackend& backend,
                                         const Bytes& ek, SeedBundle* seeds = nullptr);

/// Draws xi (256 bits). Consumes 256 bits.
std::optional<MldsaKeyPair> mldsa_keygen(EntropySource& source, PqcBackend& backend,
                                         SeedBundle* seeds = nullptr);

/// Rejects |ctx| > 255 before drawing; draws rnd (256 bits); signs
/// M' = 0x00 || len(ctx) || ctx || M. Consumes 256 bits.
std::optional<Bytes> mldsa_sign(EntropySource& source, PqcBackend& backend,
                                const SignRequest& request, const Bytes& sk,
                                SeedBundle* seeds = nullptr);

enum class SlhKeygenMode {
    three_calls,        // SK.seed, SK.prf, PK.seed drawn as three 8n-bit calls
    single_call_split,  // one 24n-bit draw sliced into thirds
};

/// Consumes 24n bits in either mode; over the same source stream both modes
/// produce identical seed triples and identical key pairs.
std::optional<SlhKeyPair> slh_keygen(EntropySource& source, PqcBackend& backend,
                                     const SlhParamSet& params, SlhKeygenMode mode,
                                     SeedBundle* seeds = nullptr);

/// Rejects |ctx| > 255 before drawing; draws addrnd (8n bits); signs
/// M' = 0x00 || len(ctx) || ctx || M. Consumes 8n bits.
std::optional<Bytes> slh_sign(EntropySource& source, PqcBackend& backend,
                              const SignRequest& request, const Bytes& sk,
                              const SlhParamSet& params, SeedBundle* seeds = nullptr);

/// Pre-hash variant: M' = 0x01 || len(ctx) || ctx || OID || PH(M).
/// request.pre_hash must be set (std::invalid_argument otherwise).
/// Consumes 8n bits.
std::optional<Bytes> hash_slh_sign(EntropySource& source, PqcBackend& backend,
                                   const SignRequest& request, const Bytes& sk,
                                   const SlhParamSet& params, SeedBundle* seeds = nullptr);

}  // namespace qrngkit::pqc
