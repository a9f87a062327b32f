#pragma once

#include "spinor_gates/core/generators.hpp"

namespace spinor_gates {

enum class TauKind { LMinus, LPlus, RMinus, RPlus, Minus, Plus };

/// Ladder operators on qubit l:
///   tauL- = -(+i)(-)   tauL+ = -(-i)(+)   tauR- = (-i)(-)   tauR+ = (+i)(+)
/// and tau-+ = tauL-+ + tauR-+.
inline AlgebraElement tau_operator(TauKind kind, int l, int n) {
  using K = FactorKind;
  switch (kind) {
    case TauKind::LMinus: return AlgebraElement(pair_monomial(K::NilPlus, K::NilMinus, l, n), -1.0);
    case TauKind::LPlus: return AlgebraElement(pair_monomial(K::NilMinus, K::NilPlus, l, n), -1.0);
    case TauKind::RMinus: return AlgebraElement(pair_monomial(K::NilMinus, K::NilMinus, l, n), 1.0);
    case TauKind::RPlus: return AlgebraElement(pair_monomial(K::NilPlus, K::NilPlus, l, n), 1.0);
    case TauKind::Minus:
      return tau_operator(TauKind::LMinus, l, n) + tau_operator(TauKind::RMinus, l, n);
    case TauKind::Plus:
      return tau_operator(TauKind::LPlus, l, n) + tau_operator(TauKind::RPlus, l, n);
  }
  return AlgebraElement::zero(n);
}

/// [+] or [-] of the 12 pair on qubit l.
inline AlgebraElement projector12(bool plus, int l, int n) {
  return factor_element({Pair::P12, plus ? FactorKind::ProjPlus : FactorKind::ProjMinus}, l, n);
}

}  // namespace spinor_gates
