#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>

#include "qrngkit/bitstring.hpp"
#include "qrngkit/execution.hpp"

namespace qrngkit::qsim {

using Complex = std::complex<double>;

/// Tolerance for normalization, unitarity, and probability checks. Every
/// amplitude in the six recipes is an exact combination of 1/sqrt(2) and i,
/// so double precision leaves ample headroom.
inline constexpr double kTol = 1e-12;

/// Single-qubit state (alpha, beta) = amplitudes of |0> and |1>.
/// Default-constructed as |0>.
struct QubitState {
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};

    bool is_normalized(double tol = kTol) const;
};

/// 2x2 complex matrix, row-major.
struct GateMatrix {
    std::array<Complex, 4> m{};

    Complex& at(int row, int col) { return m[row * 2 + col]; }
    const Complex& at(int row, int col) const { return m[row * 2 + col]; }

    bool is_unitary(double tol = kTol) const;
};

enum class GateKind { h, sx, rx, ry, p_then_h, u };

std::string_view to_string(GateKind kind);

/// All parameterized recipes default to theta = phi = lambda = pi/2, the
/// angles every recipe is evaluated at in the uniform-superposition setting.
inline constexpr double kDefaultAngle = std::numbers::pi / 2.0;

struct GateRecipe {
    GateKind kind = GateKind::h;
    double theta = kDefaultAngle;
    double phi = kDefaultAngle;
    double lambda = kDefaultAngle;

    static GateRecipe h() { return {GateKind::h, 0.0, 0.0, 0.0}; }
    static GateRecipe sx() { return {GateKind::sx, 0.0, 0.0, 0.0}; }
    static GateRecipe rx(double theta = kDefaultAngle) { return {GateKind::rx, theta, 0.0, 0.0}; }
    static GateRecipe ry(double theta = kDefaultAngle) { return {GateKind::ry, theta, 0.0, 0.0}; }
    static GateRecipe p_then_h(double theta = kDefaultAngle) {
        return {GateKind::p_then_h, theta, 0.0, 0.0};
    }
    static GateRecipe u(double theta = kDefaultAngle, double phi = kDefaultAngle,
                        double lambda = kDefaultAngle) {
        return {GateKind::u, theta, phi, lambda};
    }
};

/// The six default recipes in their table order: h, sx, rx, ry, p_then_h, u.
std::array<GateRecipe, 6> default_recipes();

/// CLI spelling ("h", "sx", "rx", "ry", "ph", "u") -> default-angle recipe.
std::optional<GateRecipe> recipe_from_name(std::string_view name);
std::string_view recipe_name(GateKind kind);

struct QrngConfig {
    GateRecipe recipe{};
    uint32_t num_qubits = 1;
    uint64_t sampler_seed = 0;
};

/// Resolves a recipe into its unitary:
///   h:        (1/sqrt2) [[1,1],[1,-1]]
///   sx:       (1/2) [[1+i,1-i],[1-i,1+i]]
///   rx(t):    [[cos(t/2), -i sin(t/2)], [-i sin(t/2), cos(t/2)]]
///   ry(t):    [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]
///   p_then_h: H * P(t), P(t) = [[1,0],[0,e^{it}]]
///   u(t,p,l): [[cos(t/2), -e^{il} sin(t/2)],
///              [e^{ip} sin(t/2), e^{i(p+l)} cos(t/2)]]
/// Throws std::invalid_argument on non-finite angles.
GateMatrix build_gate(const GateRecipe& recipe);

QubitState apply_gate(const GateMatrix& gate, const QubitState& state);

struct OutcomeProbabilities {
    double p0;
    double p1;
};

/// Born rule: p0 = |alpha|^2, p1 = |beta|^2.
OutcomeProbabilities outcome_probabilities(const QubitState& state);

/// Collapses against one uniform draw u in [0,1): returns 1 iff u < p1.
int measure(const QubitState& state, double uniform_draw);

/// True iff applying the recipe's gate to |0> gives p0 and p1 within kTol
/// of 0.5.
bool superposition_check(const GateRecipe& recipe);

/// Circuit executions needed for nbits with a num_qubits-wide register:
/// ceil(nbits / num_qubits). The final pass's surplus bits are discarded.
uint64_t circuit_passes(uint64_t nbits, uint32_t num_qubits);

/// Reference generator. Runs circuit_passes(nbits, c) passes; each pass
/// resolves the recipe, prepares c fresh |0> qubits, applies the gate to
/// each, and measures each against the config's sampler stream (bit i uses
/// stream value i). Exactly nbits bits are returned.
BitString generate_bits_serial(const QrngConfig& config, uint64_t nbits);

/// OpenMP kernel over passes; bit-identical to generate_bits_serial.
BitString generate_bits_parallel(const QrngConfig& config, uint64_t nbits);

/// Default entry point: the parallel kernel for large requests, the serial
/// path otherwise.
BitString generate_bits(const QrngConfig& config, uint64_t nbits);

/// Like generate_bits_serial but for the stream span [first_bit,
/// first_bit + nbits); simulates only the covering passes. Consecutive
/// spans concatenate to the same bits as one larger span, which is what
/// makes multi-draw and single-draw entropy requests equivalent.
BitString generate_bit_span(const QrngConfig& config, uint64_t first_bit, uint64_t nbits);

}  // namespace qrngkit::qsim
