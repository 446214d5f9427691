#pragma once

#include <cstdint>
#include <random>

namespace liftlab {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Per-trial seed: splitmix64 over (master, stream, index). Independent of
/// how trials are spread over workers.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                          std::uint64_t index);

/// Uniform integer in [0, bound) by Lemire's multiply-shift rejection.
/// The result sequence is identical on every platform, unlike
/// std::uniform_int_distribution.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

/// Uniform double in (0, 1].
double uniform_unit_open_left(Rng& rng);

}  // namespace liftlab
