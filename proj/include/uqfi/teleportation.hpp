#pragma once

#include <array>
#include <cmath>

#include "uqfi/channel_model.hpp"
#include "uqfi/linalg.hpp"
#include "uqfi/unruh_channel.hpp"

namespace uqfi {

/// Teleported pure state cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>,
/// theta in [0, pi] (weight), phi in [0, 2 pi] (phase).
struct InputState {
  double theta = 0.0;
  double phi = 0.0;

  cplx alpha() const { return std::cos(theta / 2.0); }
  cplx beta() const { return std::polar(std::sin(theta / 2.0), phi); }
  Density2 density() const;
};

void validate(const InputState& in);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double dot(const BlochVector& o) const { return x * o.x + y * o.y + z * o.z; }
  double norm2() const { return dot(*this); }
  double norm() const { return std::sqrt(norm2()); }
  BlochVector scaled(double k) const { return {k * x, k * y, k * z}; }
  BlochVector operator-(const BlochVector& o) const { return {x - o.x, y - o.y, z - o.z}; }
  BlochVector operator+(const BlochVector& o) const { return {x + o.x, y + o.y, z + o.z}; }
};

/// Bob's state for Alice's 00 outcome.
struct BobState {
  Density2 rho;             // unnormalized branch state, trace = outcome_prob
  double outcome_prob = 0;  // probability of Alice measuring 00
  Density2 rho_normalized;  // rho / outcome_prob
};

inline constexpr double kDegenerateBranch = 1e-15;

/// Wraps an unnormalized branch state; throws DegenerateBranchError when
/// its trace is <= 1e-15.
BobState make_bob_state(const Density2& rho);

/// Branch state from the channel coefficients:
///   rho00 = (|a|^2 B1 + |b|^2 B5)/2,  rho01 = (a b* B2 + b a* B6)/2,
///   rho10 = (a b* B7 + b a* B3)/2,    rho11 = (|a|^2 B4 + |b|^2 B8)/2.
BobState teleport_analytic(const InputState& in, const AcceleratedChannel& ch);

/// The same branch state written directly in (theta, phi, c_ii, r, qR, qL).
/// Independent of the B coefficients; used as a redundancy check.
Density2 teleport_explicit(const InputState& in, const CorrelationDyadic& d,
                           const UnruhParams& u);

/// Full three-qubit simulation on (input, Alice, Bob): CNOT(input -> Alice),
/// Hadamard on input, project (input, Alice) onto |00>, trace them out.
BobState teleport_circuit_oracle(const InputState& in, const Density4& channel);

/// Probabilities of Alice's outcomes 00, 01, 10, 11 from the circuit.
std::array<double, 4> circuit_outcome_probabilities(const InputState& in,
                                                    const Density4& channel);

/// (tr rho X, tr rho Y, tr rho Z)
BlochVector bloch_of(const Density2& rho);

namespace detail {
// No range checks on the input angles; the Fisher module evaluates slightly
// past theta/phi endpoints for central differences.
Density2 branch_rho(const InputState& in, const AcceleratedChannel& ch);
}  // namespace detail

}  // namespace uqfi
