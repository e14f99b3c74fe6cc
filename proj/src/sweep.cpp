#include "uqfi/sweep.hpp"

#include <cmath>
#include <numbers>

#include "uqfi/errors.hpp"

namespace uqfi {

namespace {

constexpr double kPi = std::numbers::pi;

struct Domain {
  double lo, hi;
};

Domain domain_of(Variable v) {
  switch (v) {
    case Variable::Theta: return {0.0, kPi};
    case Variable::Phi: return {0.0, 2.0 * kPi};
    case Variable::R: return {0.0, kMaxRindler};
  }
  return {0.0, 0.0};
}

std::size_t idx(Variable v) { return static_cast<std::size_t>(v); }

// Everything a grid point needs, resolved once per sweep.
struct Resolved {
  CorrelationDyadic dyadic;
  std::size_t total = 1;
};

Resolved resolve(const SweepSpec& spec) {
  validate(spec);
  Resolved r{preset_dyadic(spec.channel)};
  for (const Axis& a : spec.axes) r.total *= static_cast<std::size_t>(a.count);
  return r;
}

SweepRow evaluate(const SweepSpec& spec, const Resolved& res, std::size_t flat) {
  std::array<double, 3> values{};
  for (std::size_t k = 0; k < 3; ++k) values[k] = spec.fixed[k].value_or(0.0);

  SweepRow row;
  row.coords.resize(spec.axes.size());
  std::size_t rem = flat;
  for (std::size_t a = spec.axes.size(); a-- > 0;) {
    const Axis& axis = spec.axes[a];
    const auto n = static_cast<std::size_t>(axis.count);
    const double x = axis.point(static_cast<int>(rem % n));
    rem /= n;
    row.coords[a] = x;
    values[idx(axis.var)] = x;
  }

  const InputState in{values[idx(Variable::Theta)], values[idx(Variable::Phi)]};
  const UnruhParams u{values[idx(Variable::R)], spec.unruh.qr, spec.unruh.ql};
  const FisherResult f = fisher(in, res.dyadic, u, spec.mode, spec.estimand, spec.method);
  row.fisher = f.value;
  row.pure_branch = f.pure_branch_taken;
  return row;
}

}  // namespace

std::string_view variable_name(Variable v) {
  switch (v) {
    case Variable::Theta: return "theta";
    case Variable::Phi: return "phi";
    case Variable::R: return "r";
  }
  return "?";
}

Variable parse_variable(std::string_view s) {
  if (s == "theta") return Variable::Theta;
  if (s == "phi") return Variable::Phi;
  if (s == "r") return Variable::R;
  throw DomainError("unknown sweep variable '" + std::string(s) + "' (expected theta|phi|r)");
}

double Axis::point(int i) const {
  if (i == count - 1) return stop;
  return start + i * (stop - start) / (count - 1);
}

UnruhMode UnruhMode::from_preset(ModePreset p) {
  const UnruhParams u = make_unruh(0.0, p);
  return {p, u.qr, u.ql};
}

void validate(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2) {
    throw DomainError("a sweep needs one or two axes");
  }
  std::array<int, 3> seen{};
  for (const Axis& a : spec.axes) {
    ++seen[idx(a.var)];
    if (a.count < 2) {
      throw DomainError("axis " + std::string(variable_name(a.var)) + " needs count >= 2");
    }
    const Domain dom = domain_of(a.var);
    for (double v : {a.start, a.stop}) {
      if (!(v >= dom.lo && v <= dom.hi)) {
        throw DomainError("axis " + std::string(variable_name(a.var)) + " value " +
                          std::to_string(v) + " outside its domain");
      }
    }
  }
  for (std::size_t k = 0; k < 3; ++k) {
    const auto name = std::string(variable_name(static_cast<Variable>(k)));
    if (seen[k] > 1) throw DomainError("variable " + name + " swept twice");
    if (seen[k] == 1 && spec.fixed[k]) {
      throw DomainError("variable " + name + " is both swept and fixed");
    }
    if (seen[k] == 0) {
      if (!spec.fixed[k]) throw DomainError("variable " + name + " needs a fixed value");
      const Domain dom = domain_of(static_cast<Variable>(k));
      if (!(*spec.fixed[k] >= dom.lo && *spec.fixed[k] <= dom.hi)) {
        throw DomainError("fixed " + name + " = " + std::to_string(*spec.fixed[k]) +
                          " outside its domain");
      }
    }
  }
  validate(UnruhParams{0.0, spec.unruh.qr, spec.unruh.ql});
  const auto d = preset_dyadic(spec.channel);
  const auto verdict = validate_physical(d);
  if (!verdict.physical) {
    throw DomainError("channel is unphysical (min eigenvalue " +
                      std::to_string(verdict.min_eigenvalue) + ")");
  }
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec& spec) {
  const Resolved res = resolve(spec);
  std::vector<SweepRow> rows;
  rows.reserve(res.total);
  for (std::size_t k = 0; k < res.total; ++k) rows.push_back(evaluate(spec, res, k));
  return rows;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  const Resolved res = resolve(spec);
  std::vector<SweepRow> rows(res.total);
  const auto n = static_cast<std::ptrdiff_t>(res.total);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    rows[static_cast<std::size_t>(k)] = evaluate(spec, res, static_cast<std::size_t>(k));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Figure presets

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"1a", "1b", "2a", "2c", "3a", "3c", "4a", "4b",
                                               "4c", "4d", "5a", "5c", "6a", "6b", "6c", "6d"};
  return ids;
}

SweepSpec figure_spec(std::string_view id, int grid, Normalization mode) {
  using V = Variable;
  const auto full = [grid](V v) {
    const Domain d = domain_of(v);
    return Axis{v, d.lo, d.hi, grid};
  };
  const ChannelPreset phi_plus = ChannelPreset::bell_phi_plus();
  const ChannelPreset psi_minus = ChannelPreset::bell_psi_minus();
  const ChannelPreset x_state = ChannelPreset::x_state(-0.9, -0.8, -0.7);
  constexpr ModePreset W = ModePreset::Wsma, B = ModePreset::BsmaSymmetric;

  struct Row {
    const char* id;
    Estimand est;
    V outer, inner, fixed_var;
    double fixed_val;
    ChannelPreset channel;
    ModePreset unruh;
  };
  const Row table[] = {
      {"1a", Estimand::Theta, V::Theta, V::R, V::Phi, kPi / 4, phi_plus, W},
      {"1b", Estimand::Theta, V::Theta, V::R, V::Phi, kPi / 4, phi_plus, B},
      {"2a", Estimand::Theta, V::Theta, V::Phi, V::R, kPi / 8, phi_plus, W},
      {"2c", Estimand::Theta, V::Theta, V::Phi, V::R, kPi / 8, phi_plus, B},
      {"3a", Estimand::Theta, V::Theta, V::Phi, V::R, kPi / 8, psi_minus, B},
      {"3c", Estimand::Theta, V::Theta, V::Phi, V::R, kPi / 8, x_state, W},
      {"4a", Estimand::Phi, V::Phi, V::R, V::Theta, kPi / 4, phi_plus, W},
      {"4b", Estimand::Phi, V::Phi, V::R, V::Theta, kPi / 4, phi_plus, B},
      {"4c", Estimand::Phi, V::Phi, V::Theta, V::R, kPi / 8, phi_plus, W},
      {"4d", Estimand::Phi, V::Phi, V::Theta, V::R, kPi / 8, phi_plus, B},
      {"5a", Estimand::Phi, V::Theta, V::Phi, V::R, kPi / 8, psi_minus, B},
      {"5c", Estimand::Phi, V::Theta, V::Phi, V::R, kPi / 8, x_state, W},
      {"6a", Estimand::UnruhR, V::Theta, V::R, V::Phi, kPi / 4, phi_plus, W},
      {"6b", Estimand::UnruhR, V::Theta, V::R, V::Phi, kPi / 4, phi_plus, B},
      {"6c", Estimand::UnruhR, V::Phi, V::R, V::Theta, kPi / 4, phi_plus, W},
      {"6d", Estimand::UnruhR, V::Phi, V::R, V::Theta, kPi / 4, phi_plus, B},
  };
  for (const Row& row : table) {
    if (id != row.id) continue;
    SweepSpec spec;
    spec.estimand = row.est;
    spec.mode = mode;
    spec.method = DerivativeMethod::analytic();
    spec.channel = row.channel;
    spec.unruh = UnruhMode::from_preset(row.unruh);
    spec.axes = {full(row.outer), full(row.inner)};
    spec.fixed[idx(row.fixed_var)] = row.fixed_val;
    spec.figure = std::string(id);
    return spec;
  }
  throw DomainError("unknown figure preset '" + std::string(id) + "'");
}

}  // namespace uqfi
