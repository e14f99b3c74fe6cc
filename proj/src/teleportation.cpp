#include "uqfi/teleportation.hpp"

#include <numbers>
#include <string>

#include "uqfi/errors.hpp"

namespace uqfi {

Density2 InputState::density() const {
  const cplx a = alpha(), b = beta();
  Density2 m;
  m << std::norm(a), a * std::conj(b), b * std::conj(a), std::norm(b);
  return m;
}

void validate(const InputState& in) {
  if (!(in.theta >= 0.0 && in.theta <= std::numbers::pi)) {
    throw DomainError("theta = " + std::to_string(in.theta) + " outside [0, pi]");
  }
  if (!(in.phi >= 0.0 && in.phi <= 2.0 * std::numbers::pi)) {
    throw DomainError("phi = " + std::to_string(in.phi) + " outside [0, 2pi]");
  }
}

BobState make_bob_state(const Density2& rho) {
  const double p = rho.trace().real();
  if (!(p > kDegenerateBranch)) {
    throw DegenerateBranchError("outcome 00 has probability " + std::to_string(p) +
                                "; cannot normalize Bob's state");
  }
  return {rho, p, rho / p};
}

namespace detail {

Density2 branch_rho(const InputState& in, const AcceleratedChannel& ch) {
  const cplx a = in.alpha(), b = in.beta();
  const double pa = std::norm(a), pb = std::norm(b);
  const cplx ab = a * std::conj(b), ba = b * std::conj(a);
  Density2 rho;
  rho(0, 0) = 0.5 * (pa * ch.B(1) + pb * ch.B(5));
  rho(0, 1) = 0.5 * (ab * ch.B(2) + ba * ch.B(6));
  rho(1, 0) = 0.5 * (ab * ch.B(7) + ba * ch.B(3));
  rho(1, 1) = 0.5 * (pa * ch.B(4) + pb * ch.B(8));
  return rho;
}

}  // namespace detail

BobState teleport_analytic(const InputState& in, const AcceleratedChannel& ch) {
  validate(in);
  return make_bob_state(detail::branch_rho(in, ch));
}

Density2 teleport_explicit(const InputState& in, const CorrelationDyadic& d,
                           const UnruhParams& u) {
  const cplx i(0.0, 1.0);
  const double c = std::cos(u.r), s = std::sin(u.r);
  const double ct = std::cos(in.theta), st = std::sin(in.theta);
  const double cp = std::cos(in.phi), sp = std::sin(in.phi);
  const cplx qr = u.qr, ql = u.ql;
  Density2 rho;
  rho(0, 0) = (c * c * (1.0 + d.c33 * ct) + std::norm(ql) * (1.0 - d.c33 * ct)) / 8.0;
  rho(0, 1) = st / 8.0 *
              (d.c11 * cp * (std::conj(qr) * c + ql * s) +
               i * d.c22 * sp * (std::conj(qr) * c - ql * s));
  rho(1, 0) = st / 8.0 *
              (d.c11 * cp * (std::conj(ql) * s + qr * c) +
               i * d.c22 * sp * (std::conj(ql) * s - qr * c));
  rho(1, 1) = (s * s * (1.0 + d.c33 * ct) + std::norm(qr) * (1.0 - d.c33 * ct)) / 8.0;
  return rho;
}

namespace {

// Qubit order (input, Alice, Bob), input most significant.
Matrix8 protocol_unitary() {
  Matrix8 cnot = Matrix8::Zero();
  for (int k = 0; k < 8; ++k) {
    const int in = (k >> 2) & 1;
    const int target = in ? (k ^ 0b010) : k;
    cnot(target, k) = 1.0;
  }
  Density2 h;
  h << 1.0, 1.0, 1.0, -1.0;
  h /= std::numbers::sqrt2;
  const Matrix8 hadamard = kron(h, Density4::Identity());
  return hadamard * cnot;
}

Matrix8 evolved(const InputState& in, const Density4& channel) {
  const Matrix8 u = protocol_unitary();
  const Matrix8 joint = kron(in.density(), channel);
  return u * joint * u.adjoint();
}

}  // namespace

std::array<double, 4> circuit_outcome_probabilities(const InputState& in,
                                                    const Density4& channel) {
  const Matrix8 out = evolved(in, channel);
  std::array<double, 4> probs{};
  for (int m = 0; m < 4; ++m) {
    probs[static_cast<std::size_t>(m)] = out.block<2, 2>(2 * m, 2 * m).trace().real();
  }
  return probs;
}

BobState teleport_circuit_oracle(const InputState& in, const Density4& channel) {
  validate(in);
  const Matrix8 out = evolved(in, channel);
  double total = 0.0;
  for (int m = 0; m < 4; ++m) total += out.block<2, 2>(2 * m, 2 * m).trace().real();
  const double expected = channel.trace().real();
  if (std::abs(total - expected) > 1e-12) {
    throw ConsistencyError("circuit outcome probabilities sum to " + std::to_string(total));
  }
  // projecting (input, Alice) onto |00> keeps the leading 2x2 block on Bob
  return make_bob_state(out.block<2, 2>(0, 0));
}

BlochVector bloch_of(const Density2& rho) {
  return {(rho * pauli::x()).trace().real(), (rho * pauli::y()).trace().real(),
          (rho * pauli::z()).trace().real()};
}

}  // namespace uqfi
