#include "uqfi/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "uqfi/errors.hpp"
#include "uqfi/fisher.hpp"
#include "uqfi/sampling.hpp"

namespace uqfi {

namespace {

struct Draw {
  CorrelationDyadic d;
  UnruhParams u;
  InputState in;
};

// Per-draw error record; reduced serially after the parallel loop so the
// report does not depend on scheduling.
struct Errors {
  double channel_oracle = 0;
  double isometry = 0;
  double teleport_oracle = 0;
  double coeff_vs_explicit = 0;
  double derivative = 0;
  std::size_t derivative_samples = 0;
  double ch_trace = 0;
  double ch_herm = 0;
  double ch_diag = 0;
  double ch_psd = 0;
  double bob_prob = 0;
  double bob_herm = 0;
  double bob_psd = 0;
  double bloch_norm = 0;
  double outcome_sum = 0;
  double fisher_negative = 0;
  double printed_b7 = 0;
};

constexpr double kOracleTol = 1e-12;
constexpr double kDerivTol = 1e-6;
constexpr double kDerivFloor = 1e-3;

double norm3(const BlochVector& v) { return v.norm(); }

Errors evaluate(const Draw& w, bool inject) {
  Errors e;
  const AcceleratedChannel ch = inject ? accelerate_as_printed(w.d, w.u) : accelerate(w.d, w.u);
  const Density4 closed = accelerated_density(ch);
  const Density4 oracle = bogoliubov_oracle(w.d, w.u);

  // (a)
  e.channel_oracle = max_abs_diff(closed, oracle);
  const auto v = bogoliubov_isometry(w.u);
  e.isometry = max_abs_diff(v.adjoint() * v, Eigen::Matrix2cd::Identity());

  // (b), (c)
  const Density2 analytic = detail::branch_rho(w.in, ch);
  try {
    const BobState circuit = teleport_circuit_oracle(w.in, oracle);
    e.teleport_oracle = max_abs_diff(analytic, circuit.rho);
  } catch (const std::exception&) {
    e.teleport_oracle = INFINITY;
  }
  e.coeff_vs_explicit = max_abs_diff(analytic, teleport_explicit(w.in, w.d, w.u));

  // (d)
  for (Normalization mode : {Normalization::Normalized, Normalization::AsPublished}) {
    for (Estimand p : {Estimand::Theta, Estimand::Phi, Estimand::UnruhR}) {
      const BlochVector a = bloch_partial(w.in, w.d, w.u, mode, p, DerivativeMethod::analytic());
      if (norm3(a) <= kDerivFloor) continue;
      const BlochVector f = bloch_partial(w.in, w.d, w.u, mode, p, DerivativeMethod::central());
      e.derivative = std::max(e.derivative, norm3(a - f) / norm3(a));
      ++e.derivative_samples;
    }
  }

  // (e)
  const ChannelInvariantErrors inv = channel_invariant_errors(ch);
  e.ch_trace = inv.trace;
  e.ch_herm = std::max(inv.hermiticity, hermiticity_error(closed));
  e.ch_diag = inv.diagonal;
  e.ch_psd = std::max(0.0, -min_eigenvalue(closed));
  const double p = analytic.trace().real();
  e.bob_prob = std::abs(p - 0.25);
  e.bob_herm = hermiticity_error(analytic);
  if (p > kDegenerateBranch) {
    const Density2 normalized = analytic / p;
    e.bob_psd = std::max(0.0, -min_eigenvalue(normalized));
    e.bloch_norm = std::max(0.0, bloch_of(normalized).norm() - 1.0);
  }
  const auto probs = circuit_outcome_probabilities(w.in, oracle);
  e.outcome_sum = std::abs(probs[0] + probs[1] + probs[2] + probs[3] - 1.0);
  for (Estimand est : {Estimand::Theta, Estimand::Phi, Estimand::UnruhR}) {
    const BlochVector s = bloch_teleported(w.in, w.d, w.u, Normalization::Normalized);
    const BlochVector ds =
        bloch_partial(w.in, w.d, w.u, Normalization::Normalized, est, DerivativeMethod::analytic());
    const double gap = 1.0 - s.norm2();
    const double raw = gap > kPureEpsilon ? ds.norm2() + std::pow(s.dot(ds), 2) / gap : ds.norm2();
    e.fisher_negative = std::max(e.fisher_negative, -raw);
  }

  // (f)
  e.printed_b7 = std::abs(printed_b7(w.d, w.u) - std::conj(ch.B(6)));
  return e;
}

CheckResult check(std::string name, double err, double tol, std::size_t n) {
  return {std::move(name), err, tol, err <= tol, false, n};
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

bool VerifySection::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.informational || c.passed; });
}

bool VerifyReport::passed() const {
  return std::all_of(sections.begin(), sections.end(),
                     [](const VerifySection& s) { return s.passed(); });
}

const VerifySection& VerifyReport::section(char tag) const {
  for (const auto& s : sections) {
    if (s.tag == tag) return s;
  }
  throw DomainError(std::string("no verify section ") + tag);
}

std::string VerifyReport::text() const {
  std::string out = "verify trials=" + std::to_string(options.trials) +
                    " seed=" + std::to_string(options.seed) +
                    (options.inject_printed_b7 ? " inject=printed-b7" : "") + "\n";
  for (const auto& s : sections) {
    out += "\n[";
    out += s.tag;
    out += "] " + s.title + "\n";
    for (const auto& c : s.checks) {
      char line[256];
      if (c.informational) {
        std::snprintf(line, sizeof line, "    %-46s max=%s  n=%zu  (informational)\n",
                      c.name.c_str(), sci(c.max_error).c_str(), c.samples);
      } else {
        std::snprintf(line, sizeof line, "    %-46s max=%s  tol=%s  n=%zu  %s\n", c.name.c_str(),
                      sci(c.max_error).c_str(), sci(c.tolerance).c_str(), c.samples,
                      c.passed ? "PASS" : "FAIL");
      }
      out += line;
    }
  }
  out += std::string("\noverall: ") + (passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

VerifyReport verify(const VerifyOptions& options) {
  if (options.trials < 1) throw DomainError("verify needs trials >= 1");

  Sampler sampler(options.seed);
  std::vector<Draw> draws;
  draws.reserve(static_cast<std::size_t>(options.trials));
  for (int k = 0; k < options.trials; ++k) {
    Draw w;
    w.d = sampler.physical_dyadic();
    w.u = sampler.unruh();
    w.in = sampler.input();
    draws.push_back(w);
  }

  std::vector<Errors> errs(draws.size());
  const auto n = static_cast<std::ptrdiff_t>(draws.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    errs[i] = evaluate(draws[i], options.inject_printed_b7);
  }

  Errors m;
  for (const Errors& e : errs) {
    m.channel_oracle = std::max(m.channel_oracle, e.channel_oracle);
    m.isometry = std::max(m.isometry, e.isometry);
    m.teleport_oracle = std::max(m.teleport_oracle, e.teleport_oracle);
    m.coeff_vs_explicit = std::max(m.coeff_vs_explicit, e.coeff_vs_explicit);
    m.derivative = std::max(m.derivative, e.derivative);
    m.derivative_samples += e.derivative_samples;
    m.ch_trace = std::max(m.ch_trace, e.ch_trace);
    m.ch_herm = std::max(m.ch_herm, e.ch_herm);
    m.ch_diag = std::max(m.ch_diag, e.ch_diag);
    m.ch_psd = std::max(m.ch_psd, e.ch_psd);
    m.bob_prob = std::max(m.bob_prob, e.bob_prob);
    m.bob_herm = std::max(m.bob_herm, e.bob_herm);
    m.bob_psd = std::max(m.bob_psd, e.bob_psd);
    m.bloch_norm = std::max(m.bloch_norm, e.bloch_norm);
    m.outcome_sum = std::max(m.outcome_sum, e.outcome_sum);
    m.fisher_negative = std::max(m.fisher_negative, e.fisher_negative);
    m.printed_b7 = std::max(m.printed_b7, e.printed_b7);
  }

  // the mutation-test anchor: singlet channel, r = pi/8, single-mode weights
  const CorrelationDyadic singlet{-1.0, -1.0, -1.0};
  const UnruhParams anchor{std::numbers::pi / 8.0, 1.0, 0.0};
  const double anchor_gap =
      std::abs(printed_b7(singlet, anchor) - std::conj(accelerate(singlet, anchor).B(6)));

  const std::size_t t = draws.size();
  VerifyReport rep;
  rep.options = options;
  rep.sections.push_back(
      {'a', "accelerated channel vs Bogoliubov isometry oracle",
       {check("max |closed form - oracle| (4x4 entries)", m.channel_oracle, kOracleTol, t),
        check("max |V^dagger V - I|", m.isometry, kOracleTol, t)}});
  rep.sections.push_back(
      {'b', "analytic teleportation vs three-qubit circuit oracle",
       {check("max |rho_analytic - rho_circuit|", m.teleport_oracle, kOracleTol, t)}});
  rep.sections.push_back(
      {'c', "coefficient form vs explicit angle form of Bob's state",
       {check("max |rho(B1..B8) - rho(theta,phi,r)|", m.coeff_vs_explicit, kOracleTol, t)}});
  rep.sections.push_back(
      {'d', "analytic vs central-difference Bloch partials (|ds| > 1e-3)",
       {check("max relative error", m.derivative, kDerivTol, m.derivative_samples)}});
  rep.sections.push_back(
      {'e', "module invariants",
       {check("channel |trace - 1|", m.ch_trace, kTraceTol, t),
        check("channel Hermiticity", m.ch_herm, kHermTol, t),
        check("channel diagonal real and >= 0", m.ch_diag, kPsdTol, t),
        check("channel -min eigenvalue", m.ch_psd, kPsdTol, t),
        check("Bob |outcome_prob - 1/4|", m.bob_prob, kTraceTol, t),
        check("Bob Hermiticity", m.bob_herm, kHermTol, t),
        check("Bob -min eigenvalue (normalized)", m.bob_psd, kPsdTol, t),
        check("Bob |s| - 1", m.bloch_norm, kBlochNormTol, t),
        check("circuit |sum of outcome probabilities - 1|", m.outcome_sum, kTraceTol, t),
        check("-min Fisher value", m.fisher_negative, kNegativeClamp, 3 * t)}});
  VerifySection doc{'f', "as-printed B7 vs conj(B6) (documentation only)", {}};
  doc.checks.push_back({"max |B7_printed - conj(B6)| over draws", m.printed_b7, 0.0, true, true, t});
  doc.checks.push_back(
      {"singlet r=pi/8 WSMA |B7_printed - conj(B6)|", anchor_gap, 0.0, true, true, 1});
  rep.sections.push_back(std::move(doc));
  return rep;
}

}  // namespace uqfi
