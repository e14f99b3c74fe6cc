#pragma once

#include <string>
#include <string_view>

#include "uqfi/linalg.hpp"

namespace uqfi {

/// Diagonal correlation triple of the shared two-qubit state
///   rho = 1/4 (I + c11 XX + c22 YY + c33 ZZ).
struct CorrelationDyadic {
  double c11 = 0.0;
  double c22 = 0.0;
  double c33 = 0.0;

  friend bool operator==(const CorrelationDyadic&, const CorrelationDyadic&) = default;
};

/// Throws DomainError naming the field if any coefficient is outside [-1, 1].
void validate(const CorrelationDyadic& d);

enum class PresetKind { BellPhiPlus, BellPsiMinus, Werner, XState };

struct ChannelPreset {
  PresetKind kind = PresetKind::BellPhiPlus;
  double werner_f = 0.0;      // Werner only
  CorrelationDyadic xstate{};  // XState only

  static ChannelPreset bell_phi_plus() { return {PresetKind::BellPhiPlus}; }
  static ChannelPreset bell_psi_minus() { return {PresetKind::BellPsiMinus}; }
  static ChannelPreset werner(double f) { return {PresetKind::Werner, f}; }
  static ChannelPreset x_state(double c11, double c22, double c33) {
    return {PresetKind::XState, 0.0, {c11, c22, c33}};
  }
};

/// CLI names: bell-phi-plus, bell-psi-minus, werner, x-state.
std::string_view preset_name(PresetKind kind);
PresetKind parse_preset_name(std::string_view name);

CorrelationDyadic preset_dyadic(const ChannelPreset& preset);

Density4 dyadic_to_density(const CorrelationDyadic& d);

struct PhysicalityVerdict {
  bool physical = false;
  double min_eigenvalue = 0.0;
};

/// Physical iff every eigenvalue of dyadic_to_density(d) is >= -1e-12. Never throws.
PhysicalityVerdict validate_physical(const CorrelationDyadic& d);

}  // namespace uqfi
