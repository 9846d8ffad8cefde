#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace cooksched {

/// Engine used for every stochastic component. The standard fixes its output
/// sequence, so a seed reproduces across compilers.
using Rng = std::mt19937_64;

inline constexpr std::string_view kRngAlgorithm = "mt19937_64";

// The <random> distributions are implementation-defined, so the helpers below
// map raw engine output by hand to keep runs bit-identical across builds.

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(Rng& rng, double low, double high) {
  return low + (high - low) * uniform01(rng);
}

/// Unbiased integer in [0, bound) via Lemire's multiply-and-reject method.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  using u128 = unsigned __int128;
  std::uint64_t x = rng();
  u128 product = static_cast<u128>(x) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = rng();
      product = static_cast<u128>(x) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

inline bool coin_flip(Rng& rng) { return (rng() >> 63) != 0; }

/// splitmix64 finalizer; used to decorrelate derived seeds.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// 64-bit FNV-1a.
inline constexpr std::uint64_t fnv1a(std::string_view text,
                                     std::uint64_t hash = 0xcbf29ce484222325ULL) {
  for (const char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace cooksched
