#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace hotword {

// std:: distributions are implementation-defined, so sampling goes through
// these helpers to keep outputs identical across standard libraries.
using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// FNV-1a over the bytes of `s`.
std::uint64_t fnv1a(std::string_view s);

/// Independent stream for (seed, key); stable regardless of call order.
Rng derive_rng(std::uint64_t seed, std::string_view key, std::uint64_t salt = 0);

/// Uniform integer in [0, n). n must be positive.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

/// Uniform integer in [lo, hi].
std::uint64_t uniform_between(Rng& rng, std::uint64_t lo, std::uint64_t hi);

/// Uniform double in [0, 1) with 53 bits of resolution.
double uniform_unit(Rng& rng);

bool bernoulli(Rng& rng, double p);

}  // namespace hotword
