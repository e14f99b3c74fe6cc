#include "uqfi/fisher.hpp"

#include <cmath>

#include "uqfi/errors.hpp"

namespace uqfi {

std::string_view estimand_name(Estimand e) {
  switch (e) {
    case Estimand::Theta: return "theta";
    case Estimand::Phi: return "phi";
    case Estimand::UnruhR: return "r";
  }
  return "?";
}

Estimand parse_estimand(std::string_view s) {
  if (s == "theta") return Estimand::Theta;
  if (s == "phi") return Estimand::Phi;
  if (s == "r") return Estimand::UnruhR;
  throw DomainError("unknown estimand '" + std::string(s) + "' (expected theta|phi|r)");
}

std::string_view normalization_name(Normalization n) {
  return n == Normalization::Normalized ? "normalized" : "as-published";
}

Normalization parse_normalization(std::string_view s) {
  if (s == "normalized") return Normalization::Normalized;
  if (s == "as-published") return Normalization::AsPublished;
  throw DomainError("unknown normalization '" + std::string(s) +
                    "' (expected normalized|as-published)");
}

std::string_view method_name(const DerivativeMethod& m) {
  return m.kind == DerivativeMethod::Kind::Analytic ? "analytic" : "fd";
}

DerivativeMethod parse_method(std::string_view s) {
  if (s == "analytic") return DerivativeMethod::analytic();
  if (s == "fd") return DerivativeMethod::central();
  throw DomainError("unknown derivative method '" + std::string(s) + "' (expected analytic|fd)");
}

FisherValue fisher_from_bloch(const BlochVector& s, const BlochVector& ds) {
  const double s2 = s.norm2();
  if (std::sqrt(s2) > 1.0 + kBlochNormTol) {
    throw DomainError("Bloch vector norm " + std::to_string(std::sqrt(s2)) + " exceeds 1");
  }
  FisherValue out;
  const double gap = 1.0 - s2;
  if (gap > kPureEpsilon) {
    const double proj = s.dot(ds);
    out.value = ds.norm2() + proj * proj / gap;
  } else {
    out.value = ds.norm2();
    out.pure_branch = true;
  }
  if (out.value < 0.0) {
    if (out.value < -kNegativeClamp) {
      throw ConsistencyError("negative Fisher information " + std::to_string(out.value));
    }
    out.value = 0.0;
    out.clamped = true;
  }
  return out;
}

namespace {

double mode_scale(Normalization mode) { return mode == Normalization::Normalized ? 4.0 : 1.0; }

// Bloch vector without range checks (finite-difference stencils step past the
// theta/phi domain edges).
BlochVector bloch_unchecked(const InputState& in, const CorrelationDyadic& d,
                            const UnruhParams& u, Normalization mode) {
  const Density2 rho = detail::branch_rho(in, accelerate(d, u));
  if (mode == Normalization::AsPublished) return bloch_of(rho);
  return bloch_of(make_bob_state(rho).rho_normalized);
}

// Off-diagonal element of the branch state is sin(theta)/8 * Z with
//   Z = c11 cos(phi) P + i c22 sin(phi) M,
//   P = conj(qR) cos r + qL sin r,  M = conj(qR) cos r - qL sin r.
// Unnormalized Bloch components are then
//   sx = sin(theta)/4 Re Z,  sy = -sin(theta)/4 Im Z,
//   sz = [cos 2r (1 + c33 cos theta) + (|qL|^2 - |qR|^2)(1 - c33 cos theta)] / 8.
BlochVector analytic_partial(const InputState& in, const CorrelationDyadic& d,
                             const UnruhParams& u, Estimand param) {
  const cplx i(0.0, 1.0);
  const double c = std::cos(u.r), s = std::sin(u.r);
  const double ct = std::cos(in.theta), st = std::sin(in.theta);
  const double cp = std::cos(in.phi), sp = std::sin(in.phi);
  const cplx qrc = std::conj(u.qr), ql = u.ql;
  const cplx p = qrc * c + ql * s;
  const cplx m = qrc * c - ql * s;
  const double imbalance = std::norm(u.ql) - std::norm(u.qr);

  switch (param) {
    case Estimand::Theta: {
      const cplx z = d.c11 * cp * p + i * d.c22 * sp * m;
      const double dz = d.c33 * st * (imbalance - std::cos(2.0 * u.r)) / 8.0;
      return {ct / 4.0 * z.real(), -ct / 4.0 * z.imag(), dz};
    }
    case Estimand::Phi: {
      const cplx dz = -d.c11 * sp * p + i * d.c22 * cp * m;
      return {st / 4.0 * dz.real(), -st / 4.0 * dz.imag(), 0.0};
    }
    case Estimand::UnruhR: {
      const cplx dp = -qrc * s + ql * c;
      const cplx dm = -qrc * s - ql * c;
      const cplx dz = d.c11 * cp * dp + i * d.c22 * sp * dm;
      const double dsz = -std::sin(2.0 * u.r) * (1.0 + d.c33 * ct) / 4.0;
      return {st / 4.0 * dz.real(), -st / 4.0 * dz.imag(), dsz};
    }
  }
  throw DomainError("unknown estimand");
}

BlochVector shifted(InputState in, const CorrelationDyadic& d, UnruhParams u,
                    Normalization mode, Estimand param, double delta) {
  switch (param) {
    case Estimand::Theta: in.theta += delta; break;
    case Estimand::Phi: in.phi += delta; break;
    case Estimand::UnruhR: u.r += delta; break;
  }
  return bloch_unchecked(in, d, u, mode);
}

BlochVector finite_difference(const InputState& in, const CorrelationDyadic& d,
                              const UnruhParams& u, Normalization mode, Estimand param,
                              double h) {
  auto at = [&](double delta) { return shifted(in, d, u, mode, param, delta); };
  // r is confined to [0, pi/4]; use second-order one-sided stencils at its edges.
  if (param == Estimand::UnruhR && u.r - h < 0.0) {
    return (at(0.0).scaled(-3.0) + at(h).scaled(4.0) - at(2.0 * h)).scaled(1.0 / (2.0 * h));
  }
  if (param == Estimand::UnruhR && u.r + h > kMaxRindler) {
    return (at(0.0).scaled(3.0) - at(-h).scaled(4.0) + at(-2.0 * h)).scaled(1.0 / (2.0 * h));
  }
  return (at(h) - at(-h)).scaled(1.0 / (2.0 * h));
}

void validate_all(const InputState& in, const CorrelationDyadic& d, const UnruhParams& u) {
  validate(in);
  validate(d);
  validate(u);
}

}  // namespace

BlochVector bloch_teleported(const InputState& in, const CorrelationDyadic& d,
                             const UnruhParams& u, Normalization mode) {
  validate_all(in, d, u);
  return bloch_unchecked(in, d, u, mode);
}

BlochVector bloch_partial(const InputState& in, const CorrelationDyadic& d,
                          const UnruhParams& u, Normalization mode, Estimand param,
                          const DerivativeMethod& method) {
  validate_all(in, d, u);
  switch (method.kind) {
    case DerivativeMethod::Kind::Analytic:
      // the branch trace is identically 1/4, so normalizing is a constant factor
      return analytic_partial(in, d, u, param).scaled(mode_scale(mode));
    case DerivativeMethod::Kind::CentralDifference:
      if (!(method.h > 0.0)) throw DomainError("finite-difference step must be positive");
      return finite_difference(in, d, u, mode, param, method.h);
  }
  throw DomainError("unknown derivative method");
}

FisherResult fisher(const InputState& in, const CorrelationDyadic& d, const UnruhParams& u,
                    Normalization mode, Estimand param, const DerivativeMethod& method) {
  const BlochVector s = bloch_teleported(in, d, u, mode);
  const BlochVector ds = bloch_partial(in, d, u, mode, param, method);
  const FisherValue fv = fisher_from_bloch(s, ds);
  return {fv.value, param, mode, method, fv.pure_branch, fv.clamped};
}

}  // namespace uqfi
