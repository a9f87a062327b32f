#pragma once

#include <string>

#include "spinor_gates/core/element.hpp"

namespace spinor_gates {

inline void require_qubit(int l, int n) {
  require(l >= 1 && l <= n,
          "qubit index " + std::to_string(l) + " out of range 1.." + std::to_string(n));
}

/// Single factor on qubit l (1-based), identity elsewhere.
inline Monomial factor_monomial(FactorCode f, int l, int n) {
  require_qubit(l, n);
  Monomial m(n);
  m.set_factor(l - 1, f);
  return m;
}

/// 03 factor times 12 factor on qubit l.
inline Monomial pair_monomial(FactorKind f03, FactorKind f12, int l, int n) {
  require_qubit(l, n);
  return single_qubit_monomial(n, l - 1, {f03, f12});
}

inline AlgebraElement factor_element(FactorCode f, int l, int n, cplx c = 1.0) {
  return AlgebraElement(factor_monomial(f, l, n), c);
}

/// gamma^a on qubit l written in nilpotents:
///   g0 = (+i) + (-i),  g3 = (-i) - (+i),  g1 = (+) + (-),  g2 = i((-) - (+)).
inline AlgebraElement gamma_as_element(int a, int l, int n) {
  require(a >= 0 && a <= 3, "gamma index out of range: " + std::to_string(a));
  using K = FactorKind;
  const Pair pair = (a == 0 || a == 3) ? Pair::P03 : Pair::P12;
  cplx c_plus;
  cplx c_minus;
  switch (a) {
    case 0: c_plus = 1.0; c_minus = 1.0; break;
    case 3: c_plus = -1.0; c_minus = 1.0; break;
    case 1: c_plus = 1.0; c_minus = 1.0; break;
    default: c_plus = -kI; c_minus = kI; break;
  }
  auto out = factor_element({pair, K::NilPlus}, l, n, c_plus);
  out += factor_element({pair, K::NilMinus}, l, n, c_minus);
  return out;
}

/// S^03 = (i/2)([+i] - [-i]) and S^12 = (1/2)([+] - [-]) on qubit l.
inline AlgebraElement cartan_generator(Pair pair, int l, int n) {
  const cplx half = pair == Pair::P03 ? cplx{0.0, 0.5} : cplx{0.5, 0.0};
  auto out = factor_element({pair, FactorKind::ProjPlus}, l, n, half);
  out += factor_element({pair, FactorKind::ProjMinus}, l, n, -half);
  return out;
}

/// Gamma = -4i S^03 S^12 on qubit l.
inline AlgebraElement handedness_operator(int l, int n) {
  return cplx{0.0, -4.0} * (cartan_generator(Pair::P03, l, n) * cartan_generator(Pair::P12, l, n));
}

}  // namespace spinor_gates
