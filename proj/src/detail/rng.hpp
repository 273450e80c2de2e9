#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace bzeta::detail {

// Uniform integer in [0, bound) by rejection; std::uniform_int_distribution
// is not bit-identical across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;
  std::uint64_t r = rng();
  while (r > limit) r = rng();
  return r % bound;
}

}  // namespace bzeta::detail
