#pragma once

#include <cmath>
#include <cstdint>

namespace qubofit {

/// splitmix64 finalizer; decent avalanche, cheap, stable across platforms.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives an independent RNG stream seed from a master seed and a tag.
/// Chain calls to fold in more components: mix_seed(mix_seed(s, a), b).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  return splitmix64(seed ^ splitmix64(tag));
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b) {
  return mix_seed(mix_seed(seed, a), b);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b, std::uint64_t c) {
  return mix_seed(mix_seed(seed, a, b), c);
}

/// Metropolis acceptance rule shared by the annealer and the Gibbs sampler:
/// accept with probability min[1, exp(-delta_e / temperature)].
/// `u01` is a uniform draw on [0, 1); it is not consumed when delta_e <= 0.
inline bool metropolis_accept(double delta_e, double temperature, double u01) {
  if (delta_e <= 0.0) return true;
  return u01 < std::exp(-delta_e / temperature);
}

}  // namespace qubofit
