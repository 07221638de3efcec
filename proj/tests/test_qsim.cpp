#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qrngkit/qsim.hpp"
#include "qrngkit/sampler.hpp"

using namespace qrngkit;
using namespace qrngkit::qsim;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

bool close(const Complex& a, const Complex& b, double tol = kTol) {
    return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("build_gate produces the published matrices") {
    SUBCASE("hadamard") {
        const GateMatrix h = build_gate(GateRecipe::h());
        CHECK(close(h.at(0, 0), {kInvSqrt2, 0}));
        CHECK(close(h.at(0, 1), {kInvSqrt2, 0}));
        CHECK(close(h.at(1, 0), {kInvSqrt2, 0}));
        CHECK(close(h.at(1, 1), {-kInvSqrt2, 0}));
    }
    SUBCASE("sx") {
        const GateMatrix sx = build_gate(GateRecipe::sx());
        CHECK(close(sx.at(0, 0), {0.5, 0.5}));
        CHECK(close(sx.at(0, 1), {0.5, -0.5}));
        CHECK(close(sx.at(1, 0), {0.5, -0.5}));
        CHECK(close(sx.at(1, 1), {0.5, 0.5}));
    }
    SUBCASE("rx at zero is the identity") {
        const GateMatrix id = build_gate(GateRecipe::rx(0.0));
        CHECK(close(id.at(0, 0), {1, 0}));
        CHECK(close(id.at(0, 1), {0, 0}));
        CHECK(close(id.at(1, 0), {0, 0}));
        CHECK(close(id.at(1, 1), {1, 0}));
    }
    SUBCASE("u at default angles applied to |0> gives (1/sqrt2, i/sqrt2)") {
        const QubitState out = apply_gate(build_gate(GateRecipe::u()), QubitState{});
        CHECK(close(out.alpha, {kInvSqrt2, 0}));
        CHECK(close(out.beta, {0, kInvSqrt2}));
    }
    SUBCASE("non-finite angles are rejected") {
        CHECK_THROWS_AS(build_gate(GateRecipe::rx(std::nan(""))), std::invalid_argument);
        CHECK_THROWS_AS(build_gate(GateRecipe::u(1.0, INFINITY, 1.0)), std::invalid_argument);
    }
}

TEST_CASE("apply_gate reproduces the worked superposition states") {
    const QubitState zero{};
    const QubitState h0 = apply_gate(build_gate(GateRecipe::h()), zero);
    CHECK(close(h0.alpha, {kInvSqrt2, 0}));
    CHECK(close(h0.beta, {kInvSqrt2, 0}));

    const QubitState rx0 = apply_gate(build_gate(GateRecipe::rx()), zero);
    CHECK(close(rx0.alpha, {kInvSqrt2, 0}));
    CHECK(close(rx0.beta, {0, -kInvSqrt2}));

    const QubitState sx0 = apply_gate(build_gate(GateRecipe::sx()), zero);
    CHECK(close(sx0.alpha, {0.5, 0.5}));
    CHECK(close(sx0.beta, {0.5, -0.5}));

    const QubitState id0 = apply_gate(build_gate(GateRecipe::rx(0.0)), zero);
    CHECK(close(id0.alpha, {1, 0}));
    CHECK(close(id0.beta, {0, 0}));
}

TEST_CASE("every built gate is unitary and normalizes states") {
    for (const GateRecipe& recipe : default_recipes()) {
        const GateMatrix g = build_gate(recipe);
        CHECK(g.is_unitary());
        CHECK(apply_gate(g, QubitState{}).is_normalized());
    }
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        const double t = angle(rng), p = angle(rng), l = angle(rng);
        CHECK(build_gate(GateRecipe::rx(t)).is_unitary());
        CHECK(build_gate(GateRecipe::ry(t)).is_unitary());
        CHECK(build_gate(GateRecipe::p_then_h(t)).is_unitary());
        CHECK(build_gate(GateRecipe::u(t, p, l)).is_unitary());
    }
}

TEST_CASE("outcome_probabilities follows the Born rule") {
    auto probs = outcome_probabilities({{kInvSqrt2, 0}, {kInvSqrt2, 0}});
    CHECK(std::abs(probs.p0 - 0.5) <= kTol);
    CHECK(std::abs(probs.p1 - 0.5) <= kTol);

    probs = outcome_probabilities({{0.5, 0.5}, {0.5, -0.5}});
    CHECK(std::abs(probs.p0 - 0.5) <= kTol);
    CHECK(std::abs(probs.p1 - 0.5) <= kTol);

    probs = outcome_probabilities(QubitState{});
    CHECK(probs.p0 == 1.0);
    CHECK(probs.p1 == 0.0);
}

TEST_CASE("measure thresholds the uniform draw against p1") {
    const QubitState zero{};
    const QubitState one{{0, 0}, {1, 0}};
    const QubitState even{{kInvSqrt2, 0}, {kInvSqrt2, 0}};
    for (double u : {0.0, 0.1, 0.5, 0.9, 0.999999}) {
        CHECK(measure(zero, u) == 0);
        CHECK(measure(one, u) == 1);
    }
    CHECK(measure(even, 0.25) == 1);
    CHECK(measure(even, 0.75) == 0);
}

TEST_CASE("superposition_check accepts exactly the uniform recipes") {
    CHECK(superposition_check(GateRecipe::h()));
    CHECK_FALSE(superposition_check(GateRecipe::rx(0.0)));
    for (const GateRecipe& recipe : default_recipes()) CHECK(superposition_check(recipe));
    // All six default recipes land on 0.5/0.5 within 1e-12 exactly.
    for (const GateRecipe& recipe : default_recipes()) {
        const auto probs = outcome_probabilities(apply_gate(build_gate(recipe), QubitState{}));
        CHECK(std::abs(probs.p0 - 0.5) <= kTol);
        CHECK(std::abs(probs.p1 - 0.5) <= kTol);
    }
}

TEST_CASE("p_then_h acts on |0> like plain h for any theta") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-10.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        const QubitState out = apply_gate(build_gate(GateRecipe::p_then_h(angle(rng))), QubitState{});
        CHECK(close(out.alpha, {kInvSqrt2, 0}));
        CHECK(close(out.beta, {kInvSqrt2, 0}));
    }
}

TEST_CASE("circuit_passes is the covering pass count") {
    CHECK(circuit_passes(256, 1) == 256);
    CHECK(circuit_passes(256, 8) == 32);
    CHECK(circuit_passes(8, 3) == 3);
    CHECK(circuit_passes(1, 64) == 1);
    CHECK_THROWS_AS(circuit_passes(8, 0), std::invalid_argument);
}

TEST_CASE("generate_bits returns exactly the requested length") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        QrngConfig config;
        config.recipe = default_recipes()[trial % 6];
        config.num_qubits = 1 + static_cast<uint32_t>(rng() % 64);
        config.sampler_seed = rng();
        const uint64_t nbits = 1 + rng() % 10000;
        CHECK(generate_bits_serial(config, nbits).size() == nbits);
    }
}

TEST_CASE("generate_bits is reproducible and seed-sensitive") {
    QrngConfig config{GateRecipe::h(), 4, 99};
    const BitString a = generate_bits(config, 4096);
    const BitString b = generate_bits(config, 4096);
    CHECK(a == b);

    config.sampler_seed = 100;
    CHECK_FALSE(generate_bits(config, 4096) == a);
}

TEST_CASE("parallel kernel is bit-identical to the serial reference") {
    std::mt19937_64 rng(31);
    for (const GateRecipe& recipe : default_recipes()) {
        QrngConfig config{recipe, 1 + static_cast<uint32_t>(rng() % 16), rng()};
        for (uint64_t nbits : {1ull, 7ull, 1000ull, 65536ull}) {
            CHECK(generate_bits_serial(config, nbits) == generate_bits_parallel(config, nbits));
        }
    }
}

TEST_CASE("bits depend only on the sampler stream position") {
    // c does not change the bit at index i, only how passes cover it.
    QrngConfig a{GateRecipe::h(), 1, 5};
    QrngConfig b{GateRecipe::h(), 8, 5};
    CHECK(generate_bits(a, 1000) == generate_bits(b, 1000));
}

TEST_CASE("generate_bit_span concatenates to the full stream") {
    QrngConfig config{GateRecipe::sx(), 3, 17};
    const BitString whole = generate_bits_serial(config, 500);
    BitString stitched;
    uint64_t at = 0;
    for (uint64_t step : {1ull, 2ull, 64ull, 97ull, 336ull}) {
        stitched.append(generate_bit_span(config, at, step));
        at += step;
    }
    CHECK(at == 500);
    CHECK(stitched == whole);
}

TEST_CASE("ones frequency stays near one half across 100 seeds per recipe") {
    constexpr uint64_t kBits = 100000;
    for (const GateRecipe& recipe : default_recipes()) {
        int in_band = 0;
        for (uint64_t seed = 0; seed < 100; ++seed) {
            QrngConfig config{recipe, 8, seed};
            const double ones = static_cast<double>(generate_bits(config, kBits).count_ones());
            const double fraction = ones / static_cast<double>(kBits);
            if (fraction >= 0.49 && fraction <= 0.51) ++in_band;
        }
        CHECK(in_band >= 99);
    }
}
