#include "uqfi/unruh_channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "uqfi/errors.hpp"

namespace uqfi {

void validate(const UnruhParams& u) {
  if (!(u.r >= 0.0 && u.r <= kMaxRindler)) {
    throw DomainError("r = " + std::to_string(u.r) + " outside [0, pi/4]");
  }
  const double norm = std::norm(u.qr) + std::norm(u.ql);
  if (!(std::abs(norm - 1.0) <= 1e-12)) {
    throw DomainError("|qR|^2 + |qL|^2 = " + std::to_string(norm) + ", expected 1");
  }
}

std::string_view mode_preset_name(ModePreset m) {
  return m == ModePreset::Wsma ? "wsma" : "bsma";
}

ModePreset parse_mode_preset(std::string_view name) {
  if (name == "wsma") return ModePreset::Wsma;
  if (name == "bsma") return ModePreset::BsmaSymmetric;
  throw DomainError("unknown mode '" + std::string(name) + "' (expected wsma|bsma)");
}

UnruhParams make_unruh(double r, ModePreset mode) {
  if (mode == ModePreset::Wsma) return make_unruh(r, 1.0, 0.0);
  const double w = std::numbers::sqrt2 / 2.0;
  return make_unruh(r, w, w);
}

UnruhParams make_unruh(double r, cplx qr, cplx ql) {
  UnruhParams u{r, qr, ql};
  validate(u);
  return u;
}

double r_from_acceleration(double omega, double accel, double c) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  if (!(c > 0.0)) throw DomainError("c must be positive");
  if (!(accel >= 0.0)) throw DomainError("acceleration must be non-negative");
  if (accel == 0.0) return 0.0;
  return std::atan(std::exp(-std::numbers::pi * omega * c / accel));
}

ChannelWeights channel_weights(const CorrelationDyadic& d) {
  return {(1.0 + d.c33) / 4.0, (1.0 - d.c33) / 4.0, (d.c11 + d.c22) / 4.0,
          (d.c11 - d.c22) / 4.0};
}

AcceleratedChannel accelerate(const CorrelationDyadic& d, const UnruhParams& u) {
  const auto [a1, a2, a3, a4] = channel_weights(d);
  const double c = std::cos(u.r), s = std::sin(u.r);
  const double qr2 = std::norm(u.qr), ql2 = std::norm(u.ql);
  const cplx qr = u.qr, ql = u.ql;
  AcceleratedChannel ch;
  ch.b[0] = a1 * c * c + a2 * ql2;
  ch.b[1] = a4 * std::conj(qr) * c + a3 * ql * s;
  ch.b[2] = a3 * std::conj(ql) * s + a4 * qr * c;
  ch.b[3] = a1 * s * s + a2 * qr2;
  ch.b[4] = a2 * c * c + a1 * ql2;
  ch.b[5] = a3 * std::conj(qr) * c + a4 * ql * s;
  ch.b[6] = a3 * qr * c + a4 * std::conj(ql) * s;
  ch.b[7] = a2 * s * s + a1 * qr2;
  return ch;
}

cplx printed_b7(const CorrelationDyadic& d, const UnruhParams& u) {
  const auto w = channel_weights(d);
  return w.a3 * std::conj(u.ql) * std::sin(u.r) + w.a4 * u.qr * std::cos(u.r);
}

AcceleratedChannel accelerate_as_printed(const CorrelationDyadic& d, const UnruhParams& u) {
  AcceleratedChannel ch = accelerate(d, u);
  ch.b[6] = printed_b7(d, u);
  return ch;
}

Density4 accelerated_density(const AcceleratedChannel& ch) {
  constexpr int k00 = 0, k01 = 1, k10 = 2, k11 = 3;
  Density4 m = Density4::Zero();
  m(k00, k00) = ch.B(1);
  m(k00, k11) = ch.B(2);
  m(k11, k00) = ch.B(3);
  m(k01, k01) = ch.B(4);
  m(k10, k10) = ch.B(5);
  m(k10, k01) = ch.B(6);
  m(k01, k10) = ch.B(7);
  m(k11, k11) = ch.B(8);
  return m;
}

ChannelInvariantErrors channel_invariant_errors(const AcceleratedChannel& ch) {
  ChannelInvariantErrors e;
  e.trace = std::abs(ch.B(1) + ch.B(4) + ch.B(5) + ch.B(8) - 1.0);
  e.hermiticity = std::max(std::abs(ch.B(3) - std::conj(ch.B(2))),
                           std::abs(ch.B(7) - std::conj(ch.B(6))));
  for (int k : {1, 4, 5, 8}) {
    e.diagonal = std::max({e.diagonal, std::abs(ch.B(k).imag()), -ch.B(k).real()});
  }
  return e;
}

Eigen::Matrix<cplx, 4, 2> bogoliubov_isometry(const UnruhParams& u) {
  // rows: |0_I 0_II>, |0_I 1_II>, |1_I 0_II>, |1_I 1_II>
  Eigen::Matrix<cplx, 4, 2> v = Eigen::Matrix<cplx, 4, 2>::Zero();
  v(0, 0) = std::cos(u.r);
  v(3, 0) = std::sin(u.r);
  v(2, 1) = u.qr;
  v(1, 1) = u.ql;
  return v;
}

Density4 bogoliubov_oracle(const CorrelationDyadic& d, const UnruhParams& u) {
  const Eigen::MatrixXcd lift = kron(Eigen::Matrix2cd::Identity(), bogoliubov_isometry(u));
  const Eigen::MatrixXcd full = lift * dyadic_to_density(d) * lift.adjoint();
  // ordering (Alice, Bob_I, Bob_II): region II is the least significant factor
  return partial_trace_second(full, 4, 2);
}

}  // namespace uqfi
