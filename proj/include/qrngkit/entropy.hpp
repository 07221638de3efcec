#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qrngkit/bitstring.hpp"
#include "qrngkit/qsim.hpp"

namespace qrngkit::pqc {

/// Stateful stream of random bits. request() serves exactly the requested
/// count or reports failure (which callers propagate as ⊥); the cumulative
/// counter advances only on success. One source per concurrent flow —
/// instances are not internally synchronized.
class EntropySource {
public:
    virtual ~EntropySource() = default;

    std::optional<BitString> request(uint64_t bit_count);

    const std::string& label() const { return label_; }
    uint64_t bits_served() const { return bits_served_; }

protected:
    explicit EntropySource(std::string label) : label_(std::move(label)) {}

private:
    virtual std::optional<BitString> draw(uint64_t bit_count) = 0;

    std::string label_;
    uint64_t bits_served_ = 0;
};

/// Simulator-backed source. One persistent session: consecutive requests
/// consume consecutive spans of the measured bit stream, so k draws of m
/// bits see exactly the same bits as one draw of k*m.
class QrngEntropySource final : public EntropySource {
public:
    explicit QrngEntropySource(qsim::QrngConfig config);

    const qsim::QrngConfig& config() const { return config_; }

private:
    std::optional<BitString> draw(uint64_t bit_count) override;

    qsim::QrngConfig config_;
    uint64_t next_bit_ = 0;
};

/// Host PRNG source (std::mt19937_64), the classical baseline a deployment
/// would otherwise use.
class PrngEntropySource final : public EntropySource {
public:
    explicit PrngEntropySource(uint64_t seed);

private:
    std::optional<BitString> draw(uint64_t bit_count) override;

    std::mt19937_64 rng_;
};

/// Decorator that records the size of every successful draw, preserving
/// order, so tests and demos can observe seed draw sequences.
class RecordingSource final : public EntropySource {
public:
    explicit RecordingSource(EntropySource& inner);

    const std::vector<uint64_t>& draw_sizes() const { return draw_sizes_; }

private:
    std::optional<BitString> draw(uint64_t bit_count) override;

    EntropySource& inner_;
    std::vector<uint64_t> draw_sizes_;
};

}  // namespace qrngkit::pqc
