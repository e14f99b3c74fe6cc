#pragma once

#include <cstdint>
#include <random>

#include "uqfi/channel_model.hpp"
#include "uqfi/teleportation.hpp"
#include "uqfi/unruh_channel.hpp"

namespace uqfi {

/// Seeded draws used by verify and the test suites. The uniform mapping is
/// spelled out so streams are identical across standard libraries.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi);

  /// Uniform over [-1,1]^3 restricted to physical states (rejection).
  CorrelationDyadic physical_dyadic();

  /// r uniform in [0, pi/4]; qR = e^{i a} cos m, qL = e^{i b} sin m.
  UnruhParams unruh();

  InputState input();

 private:
  std::mt19937_64 engine_;
};

}  // namespace uqfi
