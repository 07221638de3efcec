#include "qrngkit/qsim.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qrngkit/sampler.hpp"

namespace qrngkit::qsim {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_finite_angle(double value, const char* name) {
    if (!std::isfinite(value))
        throw std::invalid_argument(std::string("build_gate: non-finite angle ") + name);
}

GateMatrix matmul(const GateMatrix& a, const GateMatrix& b) {
    GateMatrix out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.at(r, c) = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
    return out;
}

GateMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    GateMatrix g;
    g.m = {Complex{s, 0}, Complex{s, 0}, Complex{s, 0}, Complex{-s, 0}};
    return g;
}

}  // namespace

bool QubitState::is_normalized(double tol) const {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()) ||
        !std::isfinite(beta.real()) || !std::isfinite(beta.imag()))
        return false;
    return std::abs(std::norm(alpha) + std::norm(beta) - 1.0) <= tol;
}

bool GateMatrix::is_unitary(double tol) const {
    for (const Complex& e : m)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    // U^dagger * U == I, entrywise.
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            Complex sum = std::conj(at(0, r)) * at(0, c) + std::conj(at(1, r)) * at(1, c);
            const Complex expected = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(sum - expected) > tol) return false;
        }
    }
    return true;
}

std::string_view to_string(GateKind kind) {
    switch (kind) {
        case GateKind::h: return "h";
        case GateKind::sx: return "sx";
        case GateKind::rx: return "rx";
        case GateKind::ry: return "ry";
        case GateKind::p_then_h: return "ph";
        case GateKind::u: return "u";
    }
    return "?";
}

std::string_view recipe_name(GateKind kind) { return to_string(kind); }

std::array<GateRecipe, 6> default_recipes() {
    return {GateRecipe::h(),  GateRecipe::sx(),        GateRecipe::rx(),
            GateRecipe::ry(), GateRecipe::p_then_h(), GateRecipe::u()};
}

std::optional<GateRecipe> recipe_from_name(std::string_view name) {
    if (name == "h") return GateRecipe::h();
    if (name == "sx") return GateRecipe::sx();
    if (name == "rx") return GateRecipe::rx();
    if (name == "ry") return GateRecipe::ry();
    if (name == "ph") return GateRecipe::p_then_h();
    if (name == "u") return GateRecipe::u();
    return std::nullopt;
}

GateMatrix build_gate(const GateRecipe& recipe) {
    GateMatrix g;
    switch (recipe.kind) {
        case GateKind::h:
            return hadamard();
        case GateKind::sx:
            g.m = {Complex{0.5, 0.5}, Complex{0.5, -0.5}, Complex{0.5, -0.5}, Complex{0.5, 0.5}};
            return g;
        case GateKind::rx: {
            require_finite_angle(recipe.theta, "theta");
            const double c = std::cos(recipe.theta / 2.0);
            const double s = std::sin(recipe.theta / 2.0);
            g.m = {Complex{c, 0}, -kI * s, -kI * s, Complex{c, 0}};
            return g;
        }
        case GateKind::ry: {
            require_finite_angle(recipe.theta, "theta");
            const double c = std::cos(recipe.theta / 2.0);
            const double s = std::sin(recipe.theta / 2.0);
            g.m = {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
            return g;
        }
        case GateKind::p_then_h: {
            require_finite_angle(recipe.theta, "theta");
            GateMatrix p;
            p.m = {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, std::exp(kI * recipe.theta)};
            return matmul(hadamard(), p);
        }
        case GateKind::u: {
            require_finite_angle(recipe.theta, "theta");
            require_finite_angle(recipe.phi, "phi");
            require_finite_angle(recipe.lambda, "lambda");
            const double c = std::cos(recipe.theta / 2.0);
            const double s = std::sin(recipe.theta / 2.0);
            g.m = {Complex{c, 0}, -std::exp(kI * recipe.lambda) * s,
                   std::exp(kI * recipe.phi) * s,
                   std::exp(kI * (recipe.phi + recipe.lambda)) * c};
            return g;
        }
    }
    throw std::invalid_argument("build_gate: unknown gate kind");
}

QubitState apply_gate(const GateMatrix& gate, const QubitState& state) {
    QubitState out;
    out.alpha = gate.at(0, 0) * state.alpha + gate.at(0, 1) * state.beta;
    out.beta = gate.at(1, 0) * state.alpha + gate.at(1, 1) * state.beta;
    return out;
}

OutcomeProbabilities outcome_probabilities(const QubitState& state) {
    return {std::norm(state.alpha), std::norm(state.beta)};
}

int measure(const QubitState& state, double uniform_draw) {
    return uniform_draw < outcome_probabilities(state).p1 ? 1 : 0;
}

bool superposition_check(const GateRecipe& recipe) {
    const QubitState after = apply_gate(build_gate(recipe), QubitState{});
    const auto [p0, p1] = outcome_probabilities(after);
    return std::abs(p0 - 0.5) <= kTol && std::abs(p1 - 0.5) <= kTol;
}

uint64_t circuit_passes(uint64_t nbits, uint32_t num_qubits) {
    if (num_qubits == 0) throw std::invalid_argument("circuit_passes: num_qubits must be >= 1");
    return (nbits + num_qubits - 1) / num_qubits;
}

namespace {

// One circuit execution: resolve the recipe, prepare a fresh |0> register,
// apply the gate to every qubit, measure every qubit. Measurement of global
// bit i consumes stream value i. Out-of-range bits (final pass surplus) are
// dropped by the caller-provided sink.
template <typename Sink>
void run_pass(const QrngConfig& config, uint64_t pass, uint64_t nbits, Sink&& sink) {
    const GateMatrix gate = build_gate(config.recipe);
    const uint32_t c = config.num_qubits;
    std::vector<QubitState> reg(c);
    for (uint32_t q = 0; q < c; ++q) reg[q] = apply_gate(gate, reg[q]);
    for (uint32_t q = 0; q < c; ++q) {
        const uint64_t i = pass * c + q;
        if (i >= nbits) break;
        sink(i, measure(reg[q], stream_uniform(config.sampler_seed, i)));
    }
}

void validate_config(const QrngConfig& config) {
    if (config.num_qubits == 0)
        throw std::invalid_argument("generate_bits: num_qubits must be >= 1");
    build_gate(config.recipe);  // surfaces invalid angles before any pass
}

}  // namespace

BitString generate_bits_serial(const QrngConfig& config, uint64_t nbits) {
    validate_config(config);
    BitString out(static_cast<size_t>(nbits));
    const uint64_t passes = circuit_passes(nbits, config.num_qubits);
    for (uint64_t p = 0; p < passes; ++p)
        run_pass(config, p, nbits, [&](uint64_t i, int bit) {
            if (bit) out.set_bit(static_cast<size_t>(i), 1);
        });
    return out;
}

BitString generate_bits_parallel(const QrngConfig& config, uint64_t nbits) {
    validate_config(config);
    const uint64_t passes = circuit_passes(nbits, config.num_qubits);

    // Passes write disjoint bit indices, but packed bytes are shared across
    // passes, so the kernel fills an unpacked buffer and packs once.
    std::vector<uint8_t> raw(static_cast<size_t>(nbits));
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int64_t p = 0; p < static_cast<int64_t>(passes); ++p)
        run_pass(config, static_cast<uint64_t>(p), nbits,
                 [&](uint64_t i, int bit) { raw[static_cast<size_t>(i)] = static_cast<uint8_t>(bit); });

    BitString out(static_cast<size_t>(nbits));
    for (size_t i = 0; i < raw.size(); ++i)
        if (raw[i]) out.set_bit(i, 1);
    return out;
}

BitString generate_bits(const QrngConfig& config, uint64_t nbits) {
    constexpr uint64_t kParallelThreshold = 1u << 15;
    if (nbits >= kParallelThreshold) return generate_bits_parallel(config, nbits);
    return generate_bits_serial(config, nbits);
}

BitString generate_bit_span(const QrngConfig& config, uint64_t first_bit, uint64_t nbits) {
    validate_config(config);
    BitString out;
    if (nbits == 0) return out;
    out = BitString(static_cast<size_t>(nbits));
    const uint64_t c = config.num_qubits;
    const uint64_t last_bit = first_bit + nbits - 1;
    for (uint64_t p = first_bit / c; p <= last_bit / c; ++p)
        run_pass(config, p, last_bit + 1, [&](uint64_t i, int bit) {
            if (i >= first_bit && bit) out.set_bit(static_cast<size_t>(i - first_bit), 1);
        });
    return out;
}

}  // namespace qrngkit::qsim
