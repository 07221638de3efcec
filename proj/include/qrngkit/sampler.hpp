#pragma once

#include <cstdint>

namespace qrngkit {

// Counter-based uniform sampler built on the SplitMix64 finalizer.
// Word i of stream `seed` is a pure function of (seed, i), so any bit of a
// stream can be computed independently: parallel kernels and the serial
// reference see exactly the same values, and streams split cleanly.
// Period per stream: 2^64 counter values.

constexpr uint64_t splitmix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// Word `index` of the stream identified by `seed`.
constexpr uint64_t stream_word(uint64_t seed, uint64_t index) {
    return splitmix64(seed + (index + 1) * kGoldenGamma);
}

/// Uniform double in [0,1): the 53 high bits of the stream word.
inline double stream_uniform(uint64_t seed, uint64_t index) {
    return static_cast<double>(stream_word(seed, index) >> 11) * 0x1.0p-53;
}

/// Seed of an independent child stream (restart sessions, parallel rows).
constexpr uint64_t derive_stream(uint64_t seed, uint64_t child) {
    return splitmix64(seed ^ (splitmix64(child) + kGoldenGamma));
}

}  // namespace qrngkit
