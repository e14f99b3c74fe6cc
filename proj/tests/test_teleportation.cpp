#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "uqfi/errors.hpp"
#include "uqfi/sampling.hpp"
#include "uqfi/teleportation.hpp"

using namespace uqfi;
using uqfi::testing::MatrixNear;

constexpr double kPi = std::numbers::pi;

namespace {

Eigen::Vector2cd input_ket(const InputState& in) { return {in.alpha(), in.beta()}; }

double fidelity(const Density2& rho, const Eigen::Vector2cd& psi) {
  return (psi.adjoint() * rho * psi)(0, 0).real();
}

const ChannelPreset kPresets[] = {ChannelPreset::bell_phi_plus(), ChannelPreset::bell_psi_minus(),
                                  ChannelPreset::werner(0.7),
                                  ChannelPreset::x_state(-0.9, -0.8, -0.7)};

}  // namespace

TEST(InputState, ValidatesAngles) {
  EXPECT_NO_THROW(validate(InputState{kPi, 2 * kPi}));
  EXPECT_THROW(validate(InputState{-0.1, 0.0}), DomainError);
  EXPECT_THROW(validate(InputState{0.0, 7.0}), DomainError);
  const InputState in{1.1, 2.3};
  EXPECT_NEAR(std::norm(in.alpha()) + std::norm(in.beta()), 1.0, 1e-15);
}

TEST(BlochOf, BasisStates) {
  const auto s0 = bloch_of(Density2::Identity() / 2.0);
  EXPECT_EQ(s0.x, 0.0);
  EXPECT_EQ(s0.y, 0.0);
  EXPECT_EQ(s0.z, 0.0);
  Density2 zero;
  zero << 1, 0, 0, 0;
  const auto sz = bloch_of(zero);
  EXPECT_NEAR(sz.z, 1.0, 1e-15);
  Density2 plus;
  plus << 0.5, 0.5, 0.5, 0.5;
  const auto sx = bloch_of(plus);
  EXPECT_NEAR(sx.x, 1.0, 1e-15);
  EXPECT_NEAR(sx.y, 0.0, 1e-15);
  EXPECT_NEAR(sx.z, 0.0, 1e-15);
}

TEST(TeleportAnalytic, PerfectChannelReproducesInput) {
  const auto ch = accelerate(preset_dyadic(ChannelPreset::bell_phi_plus()),
                             make_unruh(0.0, ModePreset::Wsma));
  for (int i = 0; i <= 16; ++i) {
    for (int j = 0; j <= 16; ++j) {
      const InputState in{i * kPi / 16, j * 2 * kPi / 16};
      const BobState bob = teleport_analytic(in, ch);
      EXPECT_NEAR(bob.outcome_prob, 0.25, 1e-12);
      EXPECT_TRUE(MatrixNear(bob.rho_normalized, in.density(), 1e-12));
      EXPECT_NEAR(fidelity(bob.rho_normalized, input_ket(in)), 1.0, 1e-12);
    }
  }
}

TEST(TeleportAnalytic, ClassicalInputHasNoCoherences) {
  Sampler rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto d = rng.physical_dyadic();
    const auto u = rng.unruh();
    const BobState bob = teleport_analytic({0.0, rng.uniform(0, 2 * kPi)}, accelerate(d, u));
    EXPECT_EQ(bob.rho(0, 1), cplx(0.0));
    EXPECT_EQ(bob.rho(1, 0), cplx(0.0));
    EXPECT_EQ(teleport_explicit({0.0, 1.0}, d, u)(0, 1), cplx(0.0));
  }
}

TEST(TeleportAnalytic, SingletRegression) {
  const CorrelationDyadic singlet{-1, -1, -1};
  const auto u = make_unruh(kPi / 8, ModePreset::Wsma);
  const BobState bob = teleport_analytic({kPi / 2, kPi / 4}, accelerate(singlet, u));
  // cos^2(pi/8)/8, (1 + sin^2(pi/8))/8, -cos(pi/8) e^{i pi/4}/8
  const double off = -0.0816601853047735329910401983392;
  EXPECT_NEAR(bob.rho(0, 0).real(), 0.106694173824159220275052772632, 1e-15);
  EXPECT_NEAR(bob.rho(1, 1).real(), 0.143305826175840779724947227368, 1e-15);
  EXPECT_NEAR(std::abs(bob.rho(0, 1) - cplx(off, off)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(bob.rho(1, 0) - cplx(off, -off)), 0.0, 1e-15);
  EXPECT_TRUE(MatrixNear(bob.rho, teleport_explicit({kPi / 2, kPi / 4}, singlet, u), 1e-15));
}

TEST(TeleportAnalytic, CoefficientAndExplicitFormsAgreeOnGrid) {
  double worst = 0.0;
  for (const auto& preset : kPresets) {
    const auto d = preset_dyadic(preset);
    for (auto mode : {ModePreset::Wsma, ModePreset::BsmaSymmetric}) {
      for (int n = 0; n < 9; ++n) {
        const auto u = make_unruh(n * kPi / 32, mode);
        const auto ch = accelerate(d, u);
        for (int i = 0; i < 17; ++i) {
          for (int j = 0; j < 17; ++j) {
            const InputState in{i * kPi / 16, j * 2 * kPi / 16};
            const BobState bob = teleport_analytic(in, ch);
            worst = std::max(worst, max_abs_diff(bob.rho, teleport_explicit(in, d, u)));
            EXPECT_NEAR(bob.outcome_prob, 0.25, 1e-12);
            EXPECT_LE(std::abs(bob.rho(1, 0) - std::conj(bob.rho(0, 1))), 1e-12);
          }
        }
      }
    }
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(CircuitOracle, MatchesAnalyticOnRandomDraws) {
  Sampler rng(99);
  double worst_closed = 0.0, worst_oracle = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto d = rng.physical_dyadic();
    const auto u = rng.unruh();
    const auto in = rng.input();
    const auto ch = accelerate(d, u);
    const BobState analytic = teleport_analytic(in, ch);
    worst_closed = std::max(
        worst_closed, max_abs_diff(analytic.rho,
                                   teleport_circuit_oracle(in, accelerated_density(ch)).rho));
    const BobState circuit = teleport_circuit_oracle(in, bogoliubov_oracle(d, u));
    worst_oracle = std::max(worst_oracle, max_abs_diff(analytic.rho, circuit.rho));
    EXPECT_NEAR(circuit.outcome_prob, 0.25, 1e-12);
    EXPECT_LE(hermiticity_error(circuit.rho_normalized), 1e-12);
    EXPECT_GE(min_eigenvalue(circuit.rho_normalized), -1e-12);
    const auto p = circuit_outcome_probabilities(in, accelerated_density(ch));
    EXPECT_NEAR(p[0] + p[1] + p[2] + p[3], 1.0, 1e-12);
  }
  EXPECT_LT(worst_closed, 1e-12);
  EXPECT_LT(worst_oracle, 1e-12);
}

TEST(CircuitOracle, MaximallyMixedChannelTransfersNothing) {
  const Density4 mixed = dyadic_to_density({0, 0, 0});
  for (const InputState in : {InputState{0.3, 1.0}, InputState{kPi / 2, 0.0}, InputState{kPi, 5.0}}) {
    const BobState bob = teleport_circuit_oracle(in, mixed);
    EXPECT_TRUE(MatrixNear(bob.rho_normalized, Density2::Identity() / 2.0, 1e-15));
  }
}

TEST(CircuitOracle, StandardProtocolSendsPlusState) {
  const BobState bob = teleport_circuit_oracle({kPi / 2, 0.0}, dyadic_to_density({1, -1, 1}));
  Density2 plus;
  plus << 0.5, 0.5, 0.5, 0.5;
  EXPECT_NEAR(bob.outcome_prob, 0.25, 1e-15);
  EXPECT_TRUE(MatrixNear(bob.rho_normalized, plus, 1e-15));
}

TEST(CircuitOracle, DegenerateBranchThrows) {
  // unphysical all-zero "channel": every branch has probability 0
  EXPECT_THROW(teleport_circuit_oracle({0.5, 0.5}, Density4::Zero()), DegenerateBranchError);
  AcceleratedChannel empty;
  EXPECT_THROW(teleport_analytic({0.5, 0.5}, empty), DegenerateBranchError);
}
