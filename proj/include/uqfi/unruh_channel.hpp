#pragma once

#include <array>
#include <string_view>

#include "uqfi/channel_model.hpp"
#include "uqfi/linalg.hpp"

namespace uqfi {

inline constexpr double kMaxRindler = 0.78539816339744830962;  // pi/4

/// Rindler parameter r in [0, pi/4] and the Minkowski-mode weights
/// (qR, qL) with |qR|^2 + |qL|^2 = 1. qR = 1, qL = 0 is the single-mode
/// approximation.
struct UnruhParams {
  double r = 0.0;
  cplx qr = 1.0;
  cplx ql = 0.0;
};

void validate(const UnruhParams& u);

enum class ModePreset { Wsma, BsmaSymmetric };

std::string_view mode_preset_name(ModePreset m);  // "wsma" | "bsma"
ModePreset parse_mode_preset(std::string_view name);

/// Validated UnruhParams with the preset's mode weights.
UnruhParams make_unruh(double r, ModePreset mode);
UnruhParams make_unruh(double r, cplx qr, cplx ql);

/// r = arctan(exp(-pi omega c / a)); a == 0 maps to r = 0.
double r_from_acceleration(double omega, double accel, double c);

/// Coefficients B1..B8 of the accelerated Alice/Bob-I state. b[0] is B1.
struct AcceleratedChannel {
  std::array<cplx, 8> b{};

  cplx B(int k) const { return b[static_cast<std::size_t>(k - 1)]; }
};

/// Intermediate weights A1..A4 derived from the dyadic.
struct ChannelWeights {
  double a1, a2, a3, a4;
};
ChannelWeights channel_weights(const CorrelationDyadic& d);

/// Closed-form accelerated channel. B7 = A3 qR cos r + A4 conj(qL) sin r,
/// the Hermitian partner of B6.
AcceleratedChannel accelerate(const CorrelationDyadic& d, const UnruhParams& u);

/// B7 exactly as printed in the original derivation (A3 conj(qL) sin r +
/// A4 qR cos r). Not Hermitian for A3 != A4; used only by the verify report
/// and mutation testing.
cplx printed_b7(const CorrelationDyadic& d, const UnruhParams& u);
AcceleratedChannel accelerate_as_printed(const CorrelationDyadic& d, const UnruhParams& u);

/// Places B1..B8 at (00,00),(00,11),(11,00),(01,01),(10,10),(10,01),(01,10),(11,11).
Density4 accelerated_density(const AcceleratedChannel& ch);

struct ChannelInvariantErrors {
  double trace = 0.0;        // |B1+B4+B5+B8 - 1|
  double hermiticity = 0.0;  // max(|B3 - conj B2|, |B7 - conj B6|)
  double diagonal = 0.0;     // max(|Im Bk|, max(0, -Re Bk)) over the diagonal entries
};
ChannelInvariantErrors channel_invariant_errors(const AcceleratedChannel& ch);

/// Bob's isometry V: |0> -> cos r|0>_I|0>_II + sin r|1>_I|1>_II,
///                   |1> -> qR|1>_I|0>_II + qL|0>_I|1>_II
/// as a 4x2 matrix with columns indexed by Bob's input and rows by (I, II).
Eigen::Matrix<cplx, 4, 2> bogoliubov_isometry(const UnruhParams& u);

/// Independent route: (I (x) V) rho (I (x) V)^dagger, then trace out region II.
Density4 bogoliubov_oracle(const CorrelationDyadic& d, const UnruhParams& u);

}  // namespace uqfi
