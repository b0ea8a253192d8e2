#ifndef TRIFACTOR_RNG_HPP
#define TRIFACTOR_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace trifactor {

/// One splitmix64 output for input x (finalizer constants from the
/// public-domain reference implementation by Sebastiano Vigna).
std::uint64_t mix64(std::uint64_t x);

/// 64-bit FNV-1a over a byte string.
std::uint64_t fnv1a64(std::string_view s);

/// Stable sub-seed derivation: subcomponents never share a raw seed, they
/// derive one from (master, label[, index]). Same inputs, same seed, on any
/// platform.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label);
std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index);

/// Deterministic RNG used everywhere randomness is needed.
///
/// Core generator: std::mt19937_64, whose output sequence for a given seed is
/// pinned by the C++ standard. The standard *distributions* are not
/// cross-implementation stable, so all mappings (unit interval, bounded
/// integers, shuffles, subset draws) are hand-rolled here from raw 64-bit
/// draws. Runs are therefore byte-for-byte reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(mix64(seed)) {}

  std::uint64_t u64() { return gen_(); }

  /// Uniform in [0, 1), 53 mantissa bits.
  double unit() { return static_cast<double>(u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound), unbiased via rejection. bound >= 1.
  std::uint64_t below(std::uint64_t bound);

  int index(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  /// Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace trifactor

#endif
