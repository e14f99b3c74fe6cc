// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include <omp.h>

#include "uqfi/fisher.hpp"
#include "uqfi/sampling.hpp"
#include "uqfi/sweep.hpp"
#include "uqfi/teleportation.hpp"
#include "uqfi/unruh_channel.hpp"
#include "uqfi/verify.hpp"

using namespace uqfi;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kDraws = 1000;
constexpr std::uint64_t kSeed = 42;

const CorrelationDyadic kPhiPlus{1, -1, 1};
const CorrelationDyadic kPsiMinus{-1, -1, -1};

struct Draw {
  CorrelationDyadic d;
  UnruhParams u;
  InputState in;
};

std::vector<Draw> draws(std::uint64_t seed, int n) {
  Sampler rng(seed);
  std::vector<Draw> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    Draw w;
    w.d = rng.physical_dyadic();
    w.u = rng.unruh();
    w.in = rng.input();
    out.push_back(w);
  }
  return out;
}

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const Draw& w : draws(kSeed, kDraws)) {
    worst = std::max(worst, max_abs_diff(accelerated_density(accelerate(w.d, w.u)),
                                         bogoliubov_oracle(w.d, w.u)));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[128];
  std::snprintf(buf, sizeof buf, "max err %.3e (< 1e-12), %.3f s (< 5 s)", worst, secs);
  return {worst < 1e-12 && secs < 5.0, buf};
}

Outcome criterion2() {
  double oracle = 0.0, internal = 0.0;
  for (const Draw& w : draws(kSeed, kDraws)) {
    const auto ch = accelerate(w.d, w.u);
    const Density2 rho = teleport_analytic(w.in, ch).rho;
    oracle = std::max(oracle, max_abs_diff(rho, teleport_circuit_oracle(w.in, bogoliubov_oracle(w.d, w.u)).rho));
    internal = std::max(internal, max_abs_diff(rho, teleport_explicit(w.in, w.d, w.u)));
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "oracle %.3e, B-form vs explicit %.3e (< 1e-12)", oracle, internal);
  return {oracle < 1e-12 && internal < 1e-12, buf};
}

Outcome criterion3() {
  double worst = 0.0;
  for (const Draw& w : draws(kSeed, kDraws)) {
    worst = std::max(worst, std::abs(teleport_analytic(w.in, accelerate(w.d, w.u)).outcome_prob - 0.25));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "max |p - 1/4| %.3e (< 1e-12)", worst);
  return {worst < 1e-12, buf};
}

double F(const InputState& in, const CorrelationDyadic& d, const UnruhParams& u, Estimand p,
         Normalization m = Normalization::Normalized) {
  return fisher(in, d, u, m, p, DerivativeMethod::analytic()).value;
}

Outcome criterion4() {
  double cos2 = 0.0, inertial = 0.0, fr = 0.0, sixteenth = 0.0;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      for (int k = 0; k <= 20; ++k) {
        const double th = i * kPi / 20, ph = j * 2 * kPi / 20, r = k * (kPi / 4) / 20;
        const double f = F({th, ph}, kPhiPlus, make_unruh(r, ModePreset::Wsma), Estimand::Theta);
        cos2 = std::max(cos2, std::abs(f - std::pow(std::cos(r), 2)));
      }
      const InputState in{i * kPi / 20, j * 2 * kPi / 20};
      const auto u0 = make_unruh(0.0, ModePreset::Wsma);
      inertial = std::max(inertial, std::abs(F(in, kPhiPlus, u0, Estimand::Theta) - 1.0));
      inertial = std::max(inertial, std::abs(F(in, kPhiPlus, u0, Estimand::Phi) -
                                             std::pow(std::sin(in.theta), 2)));
    }
  }
  // 21 values r = k (pi/4) / 21; r = 0 is excluded (F_r = 0 there by the pure branch)
  for (int k = 1; k <= 21; ++k) {
    const double r = k * (kPi / 4) / 21;
    fr = std::max(fr, std::abs(F({0.0, 0.0}, kPhiPlus, make_unruh(r, ModePreset::Wsma), Estimand::UnruhR) - 4.0));
  }
  Sampler rng(kSeed);
  for (int k = 0; k < 200; ++k) {
    const InputState in = rng.input();
    for (const auto& d : {kPhiPlus, kPsiMinus}) {
      // only WSMA leaves the channel maximally entangled at r = 0
      const auto u0 = make_unruh(0.0, ModePreset::Wsma);
      for (auto p : {Estimand::Theta, Estimand::Phi}) {
        const double n = F(in, d, u0, p);
        sixteenth = std::max(sixteenth, std::abs(F(in, d, u0, p, Normalization::AsPublished) - n / 16));
      }
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf, "cos^2 r %.1e, inertial %.1e, F_r %.1e, /16 %.1e (< 1e-9)", cos2,
                inertial, fr, sixteenth);
  return {cos2 < 1e-9 && inertial < 1e-9 && fr < 1e-9 && sixteenth < 1e-9, buf};
}

Outcome criterion5() {
  double worst = 0.0;
  std::size_t used = 0;
  for (const Draw& w : draws(kSeed + 5, 500)) {
    for (auto p : {Estimand::Theta, Estimand::Phi, Estimand::UnruhR}) {
      for (auto m : {Normalization::Normalized, Normalization::AsPublished}) {
        const BlochVector a = bloch_partial(w.in, w.d, w.u, m, p, DerivativeMethod::analytic());
        const BlochVector fd = bloch_partial(w.in, w.d, w.u, m, p, DerivativeMethod::central());
        if (a.norm() <= 1e-3) continue;
        worst = std::max(worst, (a - fd).norm() / a.norm());
        ++used;
      }
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "max rel err %.3e (< 1e-6) over %zu partials", worst, used);
  return {worst < 1e-6 && used > 0, buf};
}

Outcome criterion6() {
  double herm = 0.0, trace = 0.0, eig = 0.0, bob_herm = 0.0, bob_trace = 0.0, bob_eig = 0.0;
  for (const Draw& w : draws(kSeed, kDraws)) {
    const Density4 ch = accelerated_density(accelerate(w.d, w.u));
    herm = std::max(herm, hermiticity_error(ch));
    trace = std::max(trace, std::abs(ch.trace() - 1.0));
    eig = std::min(eig, min_eigenvalue(ch));
    const BobState bob = teleport_analytic(w.in, accelerate(w.d, w.u));
    bob_herm = std::max(bob_herm, hermiticity_error(bob.rho_normalized));
    bob_trace = std::max(bob_trace, std::abs(bob.rho_normalized.trace() - 1.0));
    bob_eig = std::min(bob_eig, min_eigenvalue(bob.rho_normalized));
  }
  double fmin = INFINITY;
  bool finite = true;
  for (const auto& id : figure_ids()) {
    for (auto mode : {Normalization::AsPublished, Normalization::Normalized}) {
      for (const SweepRow& row : run_sweep(figure_spec(id, kDefaultGrid, mode))) {
        finite = finite && std::isfinite(row.fisher);
        fmin = std::min(fmin, row.fisher);
      }
    }
  }
  const bool ok = herm < 1e-12 && trace < 1e-12 && eig >= -1e-12 && bob_herm < 1e-12 &&
                  bob_trace < 1e-12 && bob_eig >= -1e-12 && finite && fmin >= -1e-9;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "channel herm %.1e tr %.1e eig %.1e; Bob herm %.1e tr %.1e eig %.1e; "
                "figures min F %.3e%s",
                herm, trace, eig, bob_herm, bob_trace, bob_eig, fmin, finite ? "" : " NaN/Inf");
  return {ok, buf};
}

Outcome criterion7() {
  auto decreasing = [](const DerivativeMethod& method) {
    double prev = INFINITY;
    for (int k = 0; k < 64; ++k) {
      const double r = k * (kPi / 4) / 63;
      const double f = fisher({kPi / 4, kPi / 4}, kPhiPlus, make_unruh(r, ModePreset::Wsma),
                              Normalization::AsPublished, Estimand::Theta, method)
                           .value;
      if (!(f < prev)) return false;
      prev = f;
    }
    return true;
  };
  const bool fd = decreasing(DerivativeMethod::central());
  const bool analytic = fd && decreasing(DerivativeMethod::analytic());
  return {fd && analytic, std::string("finite-difference ") + (fd ? "decreasing" : "NOT decreasing") +
                              ", analytic " + (analytic ? "decreasing" : "NOT decreasing")};
}

Outcome criterion8() {
  const auto u = make_unruh(kPi / 8, ModePreset::Wsma);
  const auto printed = accelerate_as_printed(kPsiMinus, u);
  const double herm = hermiticity_error(accelerated_density(printed));
  const InputState in{kPi / 3, kPi / 5};
  const double tele = max_abs_diff(teleport_analytic(in, printed).rho,
                                   teleport_circuit_oracle(in, bogoliubov_oracle(kPsiMinus, u)).rho);
  const bool report_fails = !verify({kDraws, kSeed, true}).passed();
  char buf[160];
  std::snprintf(buf, sizeof buf, "printed B7: Hermiticity err %.3e, teleport err %.3e, verify %s",
                herm, tele, report_fails ? "fails" : "passes");
  return {(herm > 1e-12 || tele > 1e-12) && report_fails, buf};
}

std::string emissions() {
  std::string all;
  for (const auto& id : figure_ids()) {
    const SweepSpec s = figure_spec(id);
    const auto rows = run_sweep(s);
    all += to_csv(s, rows);
    all += to_json(s, rows);
  }
  return all;
}

Outcome criterion9() {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const std::string v1 = verify({kDraws, kSeed}).text();
  const std::string e1 = emissions();
  omp_set_num_threads(4);
  const std::string v4 = verify({kDraws, kSeed}).text();
  const std::string e4 = emissions();
  const std::string v4b = verify({kDraws, kSeed}).text();
  const std::string e4b = emissions();
  omp_set_num_threads(saved);
  const bool ok = v1 == v4 && v4 == v4b && e1 == e4 && e4 == e4b;
  return {ok, "verify report and 16 figure emissions (csv+json) identical across 2 runs, 1 vs 4 threads"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"1 channel oracle equivalence", criterion1},
      {"2 teleportation oracle equivalence", criterion2},
      {"3 branch probability", criterion3},
      {"4 closed-form anchors", criterion4},
      {"5 derivative cross-validation", criterion5},
      {"6 physicality suite", criterion6},
      {"7 AsPublished F_theta decreasing in r", criterion7},
      {"8 printed-B7 mutation detected", criterion8},
      {"9 determinism", criterion9},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.passed ? 0 : 1;
    std::printf("%s  %-40s %s\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
