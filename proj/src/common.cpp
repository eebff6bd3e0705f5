#include "smbench/common.hpp"

#include <cmath>
#include <numbers>

namespace smbench {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

double NoiseStream::uniform_at(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t z = mix(seed + (index + 1) * kGolden);
  // (z >> 11) spans [0, 2^53); the +0.5 keeps the draw strictly inside (0,1)
  // so the Box-Muller log() below never sees zero.
  return (static_cast<double>(z >> 11) + 0.5) * 0x1.0p-53;
}

double NoiseStream::gaussian_at(std::uint64_t seed, std::uint64_t index) {
  const double u1 = uniform_at(seed, 2 * index);
  const double u2 = uniform_at(seed, 2 * index + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace smbench
