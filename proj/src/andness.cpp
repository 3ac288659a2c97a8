#include "oodlsp/andness.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <vector>

#include "oodlsp/aggregate.hpp"
#include "oodlsp/gcd_operator.hpp"
#include "oodlsp/preference.hpp"

namespace oodlsp {
namespace detail {
namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

void check_andness_args(int arity, std::uint64_t samples) {
  if (arity < kMinArity || arity > kMaxArity) {
    throw ContractViolation("estimate_andness: arity " + std::to_string(arity) +
                            " outside " + std::to_string(kMinArity) + ".." + std::to_string(kMaxArity));
  }
  if (samples < kMinAndnessSamples) {
    throw ContractViolation("estimate_andness: need at least " +
                            std::to_string(kMinAndnessSamples) + " samples");
  }
}

double andness_chunk_sum(double r, int arity, std::uint64_t samples, std::uint64_t seed,
                         std::uint64_t chunk) {
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(chunk)));
  const std::uint64_t begin = chunk * kAndnessChunk;
  const std::uint64_t end = std::min(samples, begin + kAndnessChunk);
  std::array<double, kMaxArity> x{};
  const std::span<const double> inputs(x.data(), static_cast<std::size_t>(arity));
  double sum = 0.0;
  for (std::uint64_t s = begin; s < end; ++s) {
    for (int i = 0; i < arity; ++i) {
      x[static_cast<std::size_t>(i)] = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
    sum += power_mean_equal(inputs, r);
  }
  return sum;
}

double andness_from_mean(double mean_of_means, int arity) {
  const double k = arity;
  const double expected_max = k / (k + 1.0);
  const double expected_min = 1.0 / (k + 1.0);
  return (expected_max - mean_of_means) / (expected_max - expected_min);
}

}  // namespace detail

double estimate_andness(double r, int arity, std::uint64_t samples, std::uint64_t seed) {
  detail::check_andness_args(arity, samples);
  const std::uint64_t chunks = (samples + detail::kAndnessChunk - 1) / detail::kAndnessChunk;
  std::vector<double> partial(chunks);
  const auto n = static_cast<std::int64_t>(chunks);

#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < n; ++c) {
    partial[static_cast<std::size_t>(c)] =
        detail::andness_chunk_sum(r, arity, samples, seed, static_cast<std::uint64_t>(c));
  }

  double total = 0.0;
  for (double p : partial) total += p;
  return detail::andness_from_mean(total / static_cast<double>(samples), arity);
}

}  // namespace oodlsp
