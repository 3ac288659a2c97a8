#pragma once

#include <cstdint>

namespace oodlsp {

inline constexpr std::uint64_t kMinAndnessSamples = 100'000;

/// Monte Carlo estimate of the andness (degree of conjunctive behaviour) of
/// the equal-weight power mean with exponent r over `arity` independent
/// uniform inputs:
///
///   alpha = (E[max] - E[M_r]) / (E[max] - E[min]),
///   E[max] = k/(k+1), E[min] = 1/(k+1).
///
/// Samples are drawn in fixed-size chunks, each seeded from (seed, chunk
/// index), and chunk sums are reduced in index order, so the result does not
/// depend on the OpenMP thread count.
[[nodiscard]] double estimate_andness(double r, int arity, std::uint64_t samples,
                                      std::uint64_t seed);

namespace reference {

/// Single-threaded implementation of the same estimator; bit-identical to
/// oodlsp::estimate_andness for equal arguments.
[[nodiscard]] double estimate_andness(double r, int arity, std::uint64_t samples,
                                      std::uint64_t seed);

}  // namespace reference

namespace detail {

inline constexpr std::uint64_t kAndnessChunk = 4096;

// Sum of M_r over samples [chunk*kAndnessChunk, min(samples, ...)) .
double andness_chunk_sum(double r, int arity, std::uint64_t samples, std::uint64_t seed,
                         std::uint64_t chunk);

double andness_from_mean(double mean_of_means, int arity);

void check_andness_args(int arity, std::uint64_t samples);

}  // namespace detail
}  // namespace oodlsp
