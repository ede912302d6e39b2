#pragma once

#include <cstdint>

// Counter-based deterministic random numbers. Every draw is a pure function
// of (seed, counter), so a stream can be advanced without generating values
// and two consumers that walk the same counters see identical numbers.

namespace mixbandit {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// n-th output of the splitmix64 stream identified by seed.
inline std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t counter) {
    return mix64(seed + (counter + 1) * kGolden);
}

// Uniform double in [0, 1).
inline double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(counter_bits(seed, counter) >> 11) * 0x1.0p-53;
}

// Derive an independent stream seed from a base seed and a stream tag.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
    return mix64(base + kGolden) ^ mix64(tag * 0xda942042e4dd58b5ULL + 0x2545f4914f6cdd1dULL);
}

}  // namespace mixbandit
