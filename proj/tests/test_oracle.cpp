#include <cmath>
#include <numbers>

#include "spinor_gates/oracle/reference_simulator.hpp"
#include "spinor_gates/oracle/sweeps.hpp"
#include "support.hpp"

using namespace spinor_gates;
using namespace spinor_gates::oracle;
using K = FactorKind;

namespace {

DenseMatrix id4() { return DenseMatrix::Identity(4, 4); }

}  // namespace

TEST(GammaMatrix, Squares) {
  EXPECT_EQ(deviation(gamma_matrix(0) * gamma_matrix(0), id4()), 0.0);
  EXPECT_EQ(deviation(gamma_matrix(2) * gamma_matrix(2), -id4()), 0.0);
}

TEST(GammaMatrix, Anticommute) {
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      EXPECT_EQ((gamma_matrix(a) * gamma_matrix(b) + gamma_matrix(b) * gamma_matrix(a)).cwiseAbs().maxCoeff(), 0.0);
    }
  }
}

TEST(GammaMatrix, HermiticityConvention) {
  EXPECT_EQ(deviation(gamma_matrix(0).adjoint(), gamma_matrix(0)), 0.0);
  for (int a = 1; a < 4; ++a) EXPECT_EQ(deviation(gamma_matrix(a).adjoint(), -gamma_matrix(a)), 0.0);
}

TEST(FactorMatrix, ProjectorFromGammas) {
  const DenseMatrix p = factor_matrix({Pair::P03, K::ProjPlus});
  EXPECT_EQ(deviation(p, 0.5 * (id4() + gamma_matrix(0) * gamma_matrix(3))), 0.0);
  EXPECT_EQ(deviation(p * p, p), 0.0);
}

TEST(FactorMatrix, NilpotentSquaresToZero) {
  const DenseMatrix n = factor_matrix({Pair::P12, K::NilPlus});
  EXPECT_EQ((n * n).cwiseAbs().maxCoeff(), 0.0);
  Eigen::FullPivLU<DenseMatrix> lu(n);
  EXPECT_LT(lu.rank(), 4);
}

TEST(FactorMatrix, CartanEigenvalue) {
  const DenseMatrix n = factor_matrix({Pair::P03, K::NilPlus});
  EXPECT_EQ(deviation(generator_matrix(0, 3) * n, cplx{0, 0.5} * n), 0.0);
}

TEST(HandednessMatrix, InvolutionWithZeroTrace) {
  const DenseMatrix g = handedness_matrix();
  EXPECT_EQ(deviation(g * g, id4()), 0.0);
  EXPECT_EQ(std::abs(g.trace()), 0.0);
}

TEST(GradedEmbedding, OddElementsOfDifferentSpinorsAnticommute) {
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const DenseMatrix x = embedded_gamma(a, 1, 2);
      const DenseMatrix y = embedded_gamma(b, 2, 2);
      EXPECT_EQ((x * y + y * x).cwiseAbs().maxCoeff(), 0.0);
    }
  }
}

TEST(GradedEmbedding, RejectsTooManySpinors) { EXPECT_THROW(GradedEmbedding(5), ContractViolation); }

TEST(VerifyTables, ZeroMismatches) {
  const auto report = verify_tables(0.0);
  EXPECT_TRUE(report.ok());
  for (const auto& c : report.checks) {
    EXPECT_EQ(c.failed, 0) << c.name;
    EXPECT_EQ(c.max_deviation, 0.0) << c.name;
  }
}

TEST(VerifyAll, IncludesGateAndExtractionSweeps) {
  const auto report = verify_all();
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.total_failed(), 0);
  EXPECT_EQ(report.checks.size(), 9u);
}

TEST(ReferenceSimulator, HadamardOnZero) {
  const Circuit c{1, {GateSpec::h(1)}};
  const auto v = simulate(c, computational_state(1, 0));
  EXPECT_NEAR(v(0).real(), 1.0 / std::sqrt(2.0), 1e-16);
  EXPECT_NEAR(v(1).real(), 1.0 / std::sqrt(2.0), 1e-16);
}

TEST(ReferenceSimulator, GroverTwoQubits) {
  for (std::size_t k = 0; k < 4; ++k) {
    const auto seq = grover_sequence(2, k, 1);
    EXPECT_NEAR(std::abs(seq[1](static_cast<Eigen::Index>(k))), 1.0, 1e-15);
  }
}

TEST(ReferenceSimulator, CnotOrdering) {
  const Circuit c{3, {GateSpec::cx(1, 3)}};
  const auto v = simulate(c, computational_state(3, 0b100));
  EXPECT_EQ(v(0b101), cplx{1.0});
}

TEST(ReferenceSimulator, SectorProjectedSymbolicOutputAgrees) {
  const auto check = check_gate_actions(1e-12);
  EXPECT_EQ(check.failed, 0);
}
