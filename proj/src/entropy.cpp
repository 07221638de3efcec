#include "qrngkit/entropy.hpp"

#include <string>

namespace qrngkit::pqc {

std::optional<BitString> EntropySource::request(uint64_t bit_count) {
    std::optional<BitString> bits = draw(bit_count);
    if (!bits || bits->size() != bit_count) return std::nullopt;
    bits_served_ += bit_count;
    return bits;
}

QrngEntropySource::QrngEntropySource(qsim::QrngConfig config)
    : EntropySource("qrng:" + std::string(qsim::recipe_name(config.recipe.kind)) + ":c" +
                    std::to_string(config.num_qubits)),
      config_(config) {}

std::optional<BitString> QrngEntropySource::draw(uint64_t bit_count) {
    BitString bits = qsim::generate_bit_span(config_, next_bit_, bit_count);
    next_bit_ += bit_count;
    return bits;
}

PrngEntropySource::PrngEntropySource(uint64_t seed) : EntropySource("prng:mt19937_64"), rng_(seed) {}

std::optional<BitString> PrngEntropySource::draw(uint64_t bit_count) {
    BitString bits(static_cast<size_t>(bit_count));
    uint64_t word = 0;
    for (uint64_t i = 0; i < bit_count; ++i) {
        if (i % 64 == 0) word = rng_();
        if ((word >> (i % 64)) & 1) bits.set_bit(static_cast<size_t>(i), 1);
    }
    return bits;
}

RecordingSource::RecordingSource(EntropySource& inner)
    : EntropySource("recording(" + inner.label() + ")"), inner_(inner) {}

std::optional<BitString> RecordingSource::draw(uint64_t bit_count) {
    std::optional<BitString> bits = inner_.request(bit_count);
    if (bits) draw_sizes_.push_back(bit_count);
    return bits;
}

}  // namespace qrngkit::pqc
