#include "trifactor/rng.hpp"

namespace trifactor {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view label) {
  return mix64(master ^ fnv1a64(label));
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index) {
  return mix64(derive_seed(master, label) + index * 0x9e3779b97f4a7c15ULL);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Reject draws from the partial block at the top of the 2^64 range.
  std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t r = u64();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace trifactor
