#include <doctest.h>

#include <fstream>

#include "qrngkit/entropy.hpp"
#include "qrngkit/pqc.hpp"
#include "qrngkit/qsim.hpp"

#include "failing_source.hpp"

using namespace qrngkit;
using namespace qrngkit::pqc;

namespace {

qsim::QrngConfig h1(uint64_t seed) { return {qsim::GateRecipe::h(), 1, seed}; }

const SlhParamSet& params(std::string_view name) {
    const SlhParamSet* p = find_slh_params(name);
    REQUIRE(p != nullptr);
    return *p;
}

Bytes bytes_of(std::string_view s) { return Bytes(s.begin(), s.end()); }

}  // namespace

TEST_CASE("SLH-DSA parameter table") {
    CHECK(slh_parameter_sets().size() == 12);
    for (const SlhParamSet& p : slh_parameter_sets()) {
        CHECK(p.seed_bits == 8 * p.n);
        const bool known = (p.n == 16 && p.seed_bits == 128 && p.security_level == 1) ||
                           (p.n == 24 && p.seed_bits == 192 && p.security_level == 3) ||
                           (p.n == 32 && p.seed_bits == 256 && p.security_level == 5);
        CHECK(known);
    }
    CHECK(params("SLH-DSA-SHAKE-128f").n == 16);
    CHECK(params("SLH-DSA-SHA2-192s").n == 24);
    CHECK(params("SLH-DSA-SHAKE-256f").n == 32);
    CHECK(find_slh_params("SLH-DSA-SHAKE-512f") == nullptr);
}

TEST_CASE("mock backend is deterministic and input-sensitive") {
    MockBackend backend;
    const Bytes d(32, 0x11), z(32, 0x22);
    const MlkemKeyPair a = backend.mlkem_keygen_internal(d, z);
    const MlkemKeyPair b = backend.mlkem_keygen_internal(d, z);
    CHECK(a.ek == b.ek);
    CHECK(a.dk == b.dk);
    CHECK_FALSE(a.ek == a.dk);

    Bytes d2 = d;
    d2[0] ^= 0x01;  // one flipped bit
    const MlkemKeyPair c = backend.mlkem_keygen_internal(d2, z);
    CHECK_FALSE(c.ek == a.ek);
    CHECK_FALSE(c.dk == a.dk);

    // Swapping parameter values changes the result: order is encoded.
    const MlkemKeyPair swapped = backend.mlkem_keygen_internal(z, d);
    CHECK_FALSE(swapped.ek == a.ek);

    REQUIRE(backend.call_count() == 4);
    CHECK(backend.transcript()[0].function == "mlkem_keygen_internal");
    REQUIRE(backend.transcript()[0].inputs.size() == 2);
    CHECK(backend.transcript()[0].inputs[0].name == "d");
    CHECK(backend.transcript()[0].inputs[1].name == "z");
    CHECK(backend.transcript()[0].inputs[0].value == d);
    CHECK(backend.transcript()[0].outputs[0].name == "ek");
}

TEST_CASE("mlkem_keygen draws d then z and consumes 512 bits") {
    QrngEntropySource source(h1(101));
    RecordingSource rec(source);
    MockBackend backend;
    SeedBundle seeds;

    const auto keys = mlkem_keygen(rec, backend, &seeds);
    REQUIRE(keys);
    CHECK(rec.bits_served() == 512);
    CHECK(rec.draw_sizes() == std::vector<uint64_t>{256, 256});
    REQUIRE(seeds.entries.size() == 2);
    CHECK(seeds.entries[0].role == "d");
    CHECK(seeds.entries[1].role == "z");
    CHECK(seeds.total_bits() == 512);
    CHECK(backend.call_count() == 1);

    // Replaying the same source stream reproduces the key pair.
    QrngEntropySource replay(h1(101));
    const auto again = mlkem_keygen(replay, backend);
    REQUIRE(again);
    CHECK(again->ek == keys->ek);
    CHECK(again->dk == keys->dk);
}

TEST_CASE("mlkem_keygen returns ⊥ without touching the backend on failure") {
    MockBackend backend;
    testsupport::FailingSource fail_first(1);
    CHECK_FALSE(mlkem_keygen(fail_first, backend));
    CHECK(fail_first.bits_served() == 0);
    CHECK(backend.call_count() == 0);

    testsupport::FailingSource fail_second(2);
    CHECK_FALSE(mlkem_keygen(fail_second, backend));
    CHECK(fail_second.bits_served() == 256);  // d completed, z failed
    CHECK(backend.call_count() == 0);
}

TEST_CASE("mlkem_encaps draws m and consumes 256 bits") {
    QrngEntropySource source(h1(102));
    MockBackend backend;
    const auto keys = mlkem_keygen(source, backend);
    REQUIRE(keys);

    RecordingSource rec(source);
    SeedBundle seeds;
    const auto enc = mlkem_encaps(rec, backend, keys->ek, &seeds);
    REQUIRE(enc);
    CHECK(rec.bits_served() == 256);
    REQUIRE(seeds.entries.size() == 1);
    CHECK(seeds.entries[0].role == "m");

    testsupport::FailingSource failing(1);
    backend.clear_transcript();
    CHECK_FALSE(mlkem_encaps(failing, backend, keys->ek));
    CHECK(backend.call_count() == 0);

    // Same ek and same m give the same (K, c).
    QrngEntropySource s1(h1(103)), s2(h1(103));
    const auto e1 = mlkem_encaps(s1, backend, keys->ek);
    const auto e2 = mlkem_encaps(s2, backend, keys->ek);
    REQUIRE(e1);
    REQUIRE(e2);
    CHECK(e1->shared_secret == e2->shared_secret);
    CHECK(e1->ciphertext == e2->ciphertext);
}

TEST_CASE("mldsa keygen and sign each consume 256 bits") {
    QrngEntropySource source(h1(104));
    RecordingSource rec(source);
    MockBackend backend;
    SeedBundle kg_seeds;

    const auto keys = mldsa_keygen(rec, backend, &kg_seeds);
    REQUIRE(keys);
    CHECK(rec.bits_served() == 256);
    CHECK(kg_seeds.entries.size() == 1);
    CHECK(kg_seeds.entries[0].role == "xi");

    SignRequest request{bytes_of("abc"), {}, std::nullopt};
    SeedBundle sign_seeds;
    const auto sig = mldsa_sign(rec, backend, request, keys->sk, &sign_seeds);
    REQUIRE(sig);
    CHECK(rec.bits_served() == 512);
    CHECK(sign_seeds.entries.size() == 1);
    CHECK(sign_seeds.entries[0].role == "rnd");

    // M' framing: domain byte 0, ctx length, ctx, then M.
    const MockBackend::Call& call = backend.transcript().back();
    REQUIRE(call.function == "mldsa_sign_internal");
    const Bytes& m_prime = call.inputs[0].value;
    REQUIRE(m_prime.size() == 2 + 3);
    CHECK(m_prime[0] == 0x00);
    CHECK(m_prime[1] == 0x00);
    CHECK(m_prime[2] == 'a');
}

TEST_CASE("mldsa_sign rejects oversize contexts before drawing") {
    MockBackend backend;
    QrngEntropySource source(h1(105));
    const auto keys = mldsa_keygen(source, backend);
    REQUIRE(keys);

    RecordingSource rec(source);
    SignRequest oversize{bytes_of("m"), Bytes(256, 0xAA), std::nullopt};
    backend.clear_transcript();
    CHECK_FALSE(mldsa_sign(rec, backend, oversize, keys->sk));
    CHECK(rec.bits_served() == 0);
    CHECK(backend.call_count() == 0);

    SignRequest max_ok{bytes_of("m"), Bytes(255, 0xAA), std::nullopt};
    CHECK(mldsa_sign(rec, backend, max_ok, keys->sk));
    CHECK(rec.bits_served() == 256);
}

TEST_CASE("slh_keygen consumes 24n bits in both modes with the listed draw order") {
    for (const auto& [name, expected] :
         std::initializer_list<std::pair<const char*, uint64_t>>{
             {"SLH-DSA-SHAKE-128f", 384}, {"SLH-DSA-SHAKE-192f", 576}, {"SLH-DSA-SHAKE-256f", 768}}) {
        const SlhParamSet& p = params(name);
        QrngEntropySource source(h1(200));
        RecordingSource rec(source);
        MockBackend backend;
        SeedBundle seeds;

        const auto keys = slh_keygen(rec, backend, p, SlhKeygenMode::three_calls, &seeds);
        REQUIRE(keys);
        CHECK(rec.bits_served() == expected);
        CHECK(rec.draw_sizes() ==
              std::vector<uint64_t>{p.seed_bits, p.seed_bits, p.seed_bits});
        REQUIRE(seeds.entries.size() == 3);
        CHECK(seeds.entries[0].role == "SK.seed");
        CHECK(seeds.entries[1].role == "SK.prf");
        CHECK(seeds.entries[2].role == "PK.seed");

        QrngEntropySource source2(h1(200));
        RecordingSource rec2(source2);
        const auto keys2 = slh_keygen(rec2, backend, p, SlhKeygenMode::single_call_split);
        REQUIRE(keys2);
        CHECK(rec2.bits_served() == expected);
        CHECK(rec2.draw_sizes() == std::vector<uint64_t>{3 * p.seed_bits});
    }
}

TEST_CASE("slh_keygen single-call split equals three calls on the same stream") {
    const SlhParamSet& p = params("SLH-DSA-SHAKE-128f");
    MockBackend backend;
    for (uint64_t seed = 0; seed < 25; ++seed) {
        QrngEntropySource three_src(h1(seed));
        QrngEntropySource one_src(h1(seed));
        SeedBundle three_seeds, one_seeds;
        const auto three = slh_keygen(three_src, backend, p, SlhKeygenMode::three_calls, &three_seeds);
        const auto one = slh_keygen(one_src, backend, p, SlhKeygenMode::single_call_split, &one_seeds);
        REQUIRE(three);
        REQUIRE(one);
        REQUIRE(three_seeds.entries.size() == 3);
        REQUIRE(one_seeds.entries.size() == 3);
        for (size_t i = 0; i < 3; ++i) {
            CHECK(three_seeds.entries[i].role == one_seeds.entries[i].role);
            CHECK(three_seeds.entries[i].bits == one_seeds.entries[i].bits);
        }
        CHECK(three->sk == one->sk);
        CHECK(three->pk == one->pk);
    }
}

TEST_CASE("slh_keygen fails closed at every draw position") {
    const SlhParamSet& p = params("SLH-DSA-SHAKE-192f");
    for (uint64_t fail_at = 1; fail_at <= 3; ++fail_at) {
        MockBackend backend;
        testsupport::FailingSource source(fail_at);
        CHECK_FALSE(slh_keygen(source, backend, p, SlhKeygenMode::three_calls));
        CHECK(source.bits_served() == (fail_at - 1) * p.seed_bits);
        CHECK(backend.call_count() == 0);
    }
    MockBackend backend;
    testsupport::FailingSource source(1);
    CHECK_FALSE(slh_keygen(source, backend, p, SlhKeygenMode::single_call_split));
    CHECK(backend.call_count() == 0);
}

TEST_CASE("slh_sign frames M' and consumes 8n bits") {
    const SlhParamSet& p = params("SLH-DSA-SHAKE-128f");
    MockBackend backend;
    QrngEntropySource source(h1(300));
    const auto keys = slh_keygen(source, backend, p, SlhKeygenMode::three_calls);
    REQUIRE(keys);

    RecordingSource rec(source);
    SeedBundle seeds;
    SignRequest request{bytes_of("abc"), {}, std::nullopt};
    const auto sig = slh_sign(rec, backend, request, keys->sk, p, &seeds);
    REQUIRE(sig);
    CHECK(rec.bits_served() == 128);
    REQUIRE(seeds.entries.size() == 1);
    CHECK(seeds.entries[0].role == "addrnd");
    CHECK(seeds.entries[0].bits.size() == 128);

    const MockBackend::Call& call = backend.transcript().back();
    REQUIRE(call.function == "slh_sign_internal");
    const Bytes& m_prime = call.inputs[0].value;
    CHECK(m_prime == Bytes{0x00, 0x00, 'a', 'b', 'c'});

    // Empty message, empty ctx: the frame is exactly two zero bytes.
    SignRequest empty{{}, {}, std::nullopt};
    REQUIRE(slh_sign(rec, backend, empty, keys->sk, p));
    CHECK(backend.transcript().back().inputs[0].value == Bytes{0x00, 0x00});

    // Oversize ctx fails before any draw.
    const uint64_t served = rec.bits_served();
    SignRequest oversize{bytes_of("m"), Bytes(256, 0x01), std::nullopt};
    backend.clear_transcript();
    CHECK_FALSE(slh_sign(rec, backend, oversize, keys->sk, p));
    CHECK(rec.bits_served() == served);
    CHECK(backend.call_count() == 0);
}

TEST_CASE("hash_slh_sign frames the pre-hash message") {
    const SlhParamSet& p = params("SLH-DSA-SHAKE-128f");
    MockBackend backend;
    QrngEntropySource source(h1(301));
    const auto keys = slh_keygen(source, backend, p, SlhKeygenMode::three_calls);
    REQUIRE(keys);

    SUBCASE("sha256 of 'abc' is the well-known digest") {
        SignRequest request{bytes_of("abc"), bytes_of("ctx"), PreHash::sha256};
        const auto sig = hash_slh_sign(source, backend, request, keys->sk, p);
        REQUIRE(sig);
        const Bytes& m_prime = backend.transcript().back().inputs[0].value;
        // 0x01, |ctx|, ctx, 11-byte OID, then SHA-256("abc").
        REQUIRE(m_prime.size() == 2 + 3 + 11 + 32);
        CHECK(m_prime[0] == 0x01);
        CHECK(m_prime[1] == 0x03);
        CHECK(m_prime[2] == 'c');
        const Bytes oid(m_prime.begin() + 5, m_prime.begin() + 16);
        CHECK(oid == Bytes{0x06, 0x09, 0x60, 0x86, 0x48, 0x01, 0x65, 0x03, 0x04, 0x02, 0x01});
        const Bytes digest(m_prime.begin() + 16, m_prime.end());
        const Bytes expected = {0xba, 0x78, 0x16, 0xbf, 0x8f, 0x01, 0xcf, 0xea, 0x41, 0x41, 0x40,
                                0xde, 0x5d, 0xae, 0x22, 0x23, 0xb0, 0x03, 0x61, 0xa3, 0x96, 0x17,
                                0x7a, 0x9c, 0xb4, 0x10, 0xff, 0x61, 0xf2, 0x00, 0x15, 0xad};
        CHECK(digest == expected);
    }

    SUBCASE("digest lengths and OID tails per pre-hash function") {
        const struct {
            PreHash ph;
            uint8_t oid_tail;
            size_t digest_len;
        } rows[] = {{PreHash::sha256, 0x01, 32},
                    {PreHash::sha512, 0x03, 64},
                    {PreHash::shake128, 0x0B, 32},
                    {PreHash::shake256, 0x0C, 64}};
        for (const auto& row : rows) {
            SignRequest request{bytes_of("msg"), {}, row.ph};
            REQUIRE(hash_slh_sign(source, backend, request, keys->sk, p));
            const Bytes& m_prime = backend.transcript().back().inputs[0].value;
            CHECK(m_prime.size() == 2 + 11 + row.digest_len);
            CHECK(m_prime[1] == 0x00);
            CHECK(m_prime[12] == row.oid_tail);  // last OID byte
            CHECK(pre_hash_digest(row.ph, bytes_of("msg")).size() == row.digest_len);
        }
    }

    SUBCASE("missing pre-hash function is an invalid parameter") {
        SignRequest request{bytes_of("abc"), {}, std::nullopt};
        CHECK_THROWS_AS(hash_slh_sign(source, backend, request, keys->sk, p),
                        std::invalid_argument);
    }

    SUBCASE("oversize ctx fails before hashing or drawing") {
        RecordingSource rec(source);
        SignRequest oversize{bytes_of("abc"), Bytes(300, 0x00), PreHash::sha256};
        backend.clear_transcript();
        CHECK_FALSE(hash_slh_sign(rec, backend, oversize, keys->sk, p));
        CHECK(rec.bits_served() == 0);
        CHECK(backend.call_count() == 0);
    }
}

TEST_CASE("mock transcript matches the golden file") {
    MockBackend backend;
    QrngEntropySource source(h1(0xC0FFEE));

    const auto kem_keys = mlkem_keygen(source, backend);
    REQUIRE(kem_keys);
    REQUIRE(mlkem_encaps(source, backend, kem_keys->ek));
    const auto dsa_keys = mldsa_keygen(source, backend);
    REQUIRE(dsa_keys);
    SignRequest request{bytes_of("abc"), bytes_of("ctx"), std::nullopt};
    REQUIRE(mldsa_sign(source, backend, request, dsa_keys->sk));
    const SlhParamSet& p = params("SLH-DSA-SHAKE-128f");
    const auto slh_keys = slh_keygen(source, backend, p, SlhKeygenMode::three_calls);
    REQUIRE(slh_keys);
    REQUIRE(slh_sign(source, backend, request, slh_keys->sk, p));
    SignRequest ph_request{bytes_of("abc"), bytes_of("ctx"), PreHash::sha256};
    REQUIRE(hash_slh_sign(source, backend, ph_request, slh_keys->sk, p));

    std::ifstream golden_file(std::string(QRNGKIT_TEST_DATA_DIR) + "/mock_transcript_golden.json");
    REQUIRE_MESSAGE(golden_file.good(), "golden file missing; build and run qrngkit-make-golden");
    const nlohmann::json golden = nlohmann::json::parse(golden_file);
    CHECK(backend.transcript_json() == golden);
}
