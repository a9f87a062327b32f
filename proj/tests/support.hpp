#pragma once

#include <random>
#include <string>

#include <gtest/gtest.h>

#include "spinor_gates/oracle/gamma_matrices.hpp"
#include "spinor_gates/oracle/verify.hpp"
#include "spinor_gates/spinor_gates.hpp"

namespace sg_test {

using namespace spinor_gates;

inline FactorKind random_kind(std::mt19937_64& rng) {
  return kAllKinds[std::uniform_int_distribution<std::size_t>(0, 4)(rng)];
}

inline Monomial random_monomial(int n, std::mt19937_64& rng) {
  Monomial m(n);
  for (int l = 0; l < n; ++l) m.set_slot(l, {random_kind(rng), random_kind(rng)});
  return m;
}

inline cplx random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  return {g(rng), g(rng)};
}

inline AlgebraElement random_element(int n, int terms, std::mt19937_64& rng) {
  AlgebraElement e(n);
  for (int t = 0; t < terms; ++t) e.add_term(random_monomial(n, rng), random_complex(rng));
  return e;
}

/// Dense matrix of an element in the graded embedding (n <= 4).
inline oracle::DenseMatrix matrix_of(const AlgebraElement& e) {
  const oracle::GradedEmbedding emb(e.size());
  return oracle::element_matrix(e, emb);
}

inline ::testing::AssertionResult elements_equivalent(const AlgebraElement& a, const AlgebraElement& b,
                                                      double tol = kDefaultTolerance) {
  if (equivalent(a, b, tol)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a.canonical().to_string() << "\n  vs\n" << b.canonical().to_string();
}

inline ::testing::AssertionResult states_near(const StateVector& a, const StateVector& b,
                                              double tol = kDefaultTolerance) {
  const double d = a.distance_max(b);
  if (d <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "max amplitude difference " << d;
}

inline StateVector ket(const std::string& bits, char sector) {
  return basis_state(parse_label(bits, std::string(1, sector)));
}

inline constexpr Sector kAllSectors[] = {Sector::Left, Sector::Right, Sector::ParityPlus, Sector::ParityMinus};

}  // namespace sg_test
