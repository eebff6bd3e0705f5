#pragma once

#include <cstdint>
#include <stdexcept>

namespace smbench {

/// Sign with sign(0) = 0, shared by the surface and every switching law.
inline double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

/// Fatal integration failure (non-finite state reached).
struct SimulationFault : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Counter-based Gaussian stream (splitmix64 + Box-Muller).
/// Bit-reproducible for a given seed and independent of platform RNG details,
/// so traces are byte-identical across repeated runs of the same binary.
class NoiseStream {
 public:
  NoiseStream() = default;
  explicit NoiseStream(std::uint64_t seed) : seed_(seed) {}

  double gaussian() { return gaussian_at(seed_, index_++); }

  /// Uniform draw in (0,1) at a fixed position of the stream.
  static double uniform_at(std::uint64_t seed, std::uint64_t index);
  /// Standard normal draw at a fixed position of the stream.
  static double gaussian_at(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t seed_ = 0;
  std::uint64_t index_ = 0;
};

}  // namespace smbench
