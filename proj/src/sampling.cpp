#include "uqfi/sampling.hpp"

#include <numbers>

namespace uqfi {

double Sampler::uniform(double lo, double hi) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

CorrelationDyadic Sampler::physical_dyadic() {
  for (;;) {
    CorrelationDyadic d{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
    if (validate_physical(d).physical) return d;
  }
}

UnruhParams Sampler::unruh() {
  constexpr double pi = std::numbers::pi;
  const double r = uniform(0.0, kMaxRindler);
  const double mix = uniform(0.0, pi / 2.0);
  const double phase_r = uniform(0.0, 2.0 * pi);
  const double phase_l = uniform(0.0, 2.0 * pi);
  return {r, std::polar(std::cos(mix), phase_r), std::polar(std::sin(mix), phase_l)};
}

InputState Sampler::input() {
  const double theta = uniform(0.0, std::numbers::pi);
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  return {theta, phi};
}

}  // namespace uqfi
