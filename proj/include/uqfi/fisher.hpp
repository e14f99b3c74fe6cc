#pragma once

#include <string>
#include <string_view>

#include "uqfi/channel_model.hpp"
#include "uqfi/teleportation.hpp"
#include "uqfi/unruh_channel.hpp"

namespace uqfi {

enum class Estimand { Theta, Phi, UnruhR };

/// Normalized: Bloch vector of the trace-1 conditional state.
/// AsPublished: Bloch vector of the unnormalized 00 branch (trace 1/4), so
/// every component is a quarter of the Normalized one.
enum class Normalization { Normalized, AsPublished };

struct DerivativeMethod {
  enum class Kind { Analytic, CentralDifference };
  Kind kind = Kind::Analytic;
  double h = 1e-5;  // CentralDifference only

  static DerivativeMethod analytic() { return {Kind::Analytic, 0.0}; }
  static DerivativeMethod central(double step = 1e-5) { return {Kind::CentralDifference, step}; }
};

std::string_view estimand_name(Estimand e);  // theta | phi | r
Estimand parse_estimand(std::string_view s);
std::string_view normalization_name(Normalization n);  // normalized | as-published
Normalization parse_normalization(std::string_view s);
std::string_view method_name(const DerivativeMethod& m);  // analytic | fd
DerivativeMethod parse_method(std::string_view s);

inline constexpr double kPureEpsilon = 1e-9;
inline constexpr double kNegativeClamp = 1e-9;
inline constexpr double kBlochNormTol = 1e-12;

struct FisherValue {
  double value = 0.0;
  bool pure_branch = false;
  bool clamped = false;
};

/// F = |ds|^2 + (s.ds)^2 / (1 - |s|^2), or |ds|^2 when 1 - |s|^2 <= 1e-9.
/// Throws DomainError for |s| > 1 + 1e-12 and ConsistencyError for a value
/// below -1e-9; values in [-1e-9, 0) are clamped to zero and flagged.
FisherValue fisher_from_bloch(const BlochVector& s, const BlochVector& ds);

BlochVector bloch_teleported(const InputState& in, const CorrelationDyadic& d,
                             const UnruhParams& u, Normalization mode);

BlochVector bloch_partial(const InputState& in, const CorrelationDyadic& d,
                          const UnruhParams& u, Normalization mode, Estimand param,
                          const DerivativeMethod& method);

struct FisherResult {
  double value = 0.0;
  Estimand param = Estimand::Theta;
  Normalization mode = Normalization::Normalized;
  DerivativeMethod method{};
  bool pure_branch_taken = false;
  bool clamped = false;
};

FisherResult fisher(const InputState& in, const CorrelationDyadic& d, const UnruhParams& u,
                    Normalization mode, Estimand param, const DerivativeMethod& method);

}  // namespace uqfi
