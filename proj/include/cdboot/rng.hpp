#pragma once

#include <cstdint>
#include <string_view>

namespace cdboot {

/// Stable stream derivation: FNV-1a 64 over (master seed bytes, stage name,
/// index bytes) followed by a splitmix64 finalizer. Adding new stages never
/// perturbs existing streams, and parallel/serial runs see identical draws.
std::uint64_t derive_seed(std::uint64_t master, std::string_view stage,
                          std::uint64_t index);

/// xoshiro256++ with self-contained uniform/normal transforms, so every
/// stream is reproducible bit-for-bit on a fixed build independent of the
/// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform();

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller; the paired draw is cached.
  double normal();

  /// Unbiased integer in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_[4];
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace cdboot
