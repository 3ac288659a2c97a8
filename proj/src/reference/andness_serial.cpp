#include "oodlsp/andness.hpp"

namespace oodlsp::reference {

double estimate_andness(double r, int arity, std::uint64_t samples, std::uint64_t seed) {
  detail::check_andness_args(arity, samples);
  const std::uint64_t chunks = (samples + detail::kAndnessChunk - 1) / detail::kAndnessChunk;
  double total = 0.0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    total += detail::andness_chunk_sum(r, arity, samples, seed, c);
  }
  return detail::andness_from_mean(total / static_cast<double>(samples), arity);
}

}  // namespace oodlsp::reference
