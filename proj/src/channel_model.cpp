#include "uqfi/channel_model.hpp"

#include "uqfi/errors.hpp"

namespace uqfi {

namespace {

void check_unit_interval(double v, double lo, double hi, const char* field) {
  if (!(v >= lo && v <= hi)) {
    throw DomainError(std::string(field) + " = " + std::to_string(v) + " outside [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

}  // namespace

void validate(const CorrelationDyadic& d) {
  check_unit_interval(d.c11, -1.0, 1.0, "c11");
  check_unit_interval(d.c22, -1.0, 1.0, "c22");
  check_unit_interval(d.c33, -1.0, 1.0, "c33");
}

std::string_view preset_name(PresetKind kind) {
  switch (kind) {
    case PresetKind::BellPhiPlus: return "bell-phi-plus";
    case PresetKind::BellPsiMinus: return "bell-psi-minus";
    case PresetKind::Werner: return "werner";
    case PresetKind::XState: return "x-state";
  }
  return "?";
}

PresetKind parse_preset_name(std::string_view name) {
  for (auto k : {PresetKind::BellPhiPlus, PresetKind::BellPsiMinus, PresetKind::Werner,
                 PresetKind::XState}) {
    if (preset_name(k) == name) return k;
  }
  throw DomainError("unknown channel preset '" + std::string(name) + "'");
}

CorrelationDyadic preset_dyadic(const ChannelPreset& preset) {
  switch (preset.kind) {
    case PresetKind::BellPhiPlus: return {1.0, -1.0, 1.0};
    case PresetKind::BellPsiMinus: return {-1.0, -1.0, -1.0};
    case PresetKind::Werner:
      check_unit_interval(preset.werner_f, 0.0, 1.0, "F");
      return {-preset.werner_f, -preset.werner_f, -preset.werner_f};
    case PresetKind::XState:
      validate(preset.xstate);
      return preset.xstate;
  }
  throw DomainError("invalid preset kind");
}

Density4 dyadic_to_density(const CorrelationDyadic& d) {
  const Density2 sx = pauli::x(), sy = pauli::y(), sz = pauli::z();
  Density4 rho = Density4::Identity();
  rho += d.c11 * kron(sx, sx);
  rho += d.c22 * kron(sy, sy);
  rho += d.c33 * kron(sz, sz);
  return 0.25 * rho;
}

PhysicalityVerdict validate_physical(const CorrelationDyadic& d) {
  const double lo = min_eigenvalue(dyadic_to_density(d));
  return {lo >= -kPsdTol, lo};
}

}  // namespace uqfi
