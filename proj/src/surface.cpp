#include "smbench/surface.hpp"

#include <cmath>
#include <string>

namespace smbench {

void SurfaceSpec::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(alpha)) throw std::invalid_argument("surface: alpha must be positive");
  if (!positive(u_max)) throw std::invalid_argument("surface: u_max must be positive");
  if (!positive(mass)) throw std::invalid_argument("surface: mass must be positive");
  if (!positive(input_gain)) throw std::invalid_argument("surface: input_gain must be positive");
  if (!std::isfinite(reference)) throw std::invalid_argument("surface: reference must be finite");
}

double sigma(double x1, double x2, const SurfaceSpec& spec) {
  if (!std::isfinite(x1) || !std::isfinite(x2))
    throw std::invalid_argument("sigma: non-finite input");
  return x1 + spec.delta_eff() * x2 * x2 * sign_of(x2);
}

}  // namespace smbench
