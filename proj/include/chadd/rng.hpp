#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace chadd {

// splitmix64; used to derive independent streams from one master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d028e38cb972fULL;
  return z ^ (z >> 31);
}

/// Deterministic stream derivation: every stochastic component draws its
/// generator from (seed, label, index) so results do not depend on the
/// order in which jobs run.
inline std::mt19937_64 derive_rng(std::uint64_t seed, std::string_view label,
                                  std::uint64_t index = 0) {
  std::uint64_t h = seed;
  for (char c : label) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(c));
    splitmix64(h);
  }
  h ^= 0x51ed2701a3c590c3ULL * (index + 1);
  std::uint64_t s = h;
  return std::mt19937_64(splitmix64(s));
}

}  // namespace chadd
