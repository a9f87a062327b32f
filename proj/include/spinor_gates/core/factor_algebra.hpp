#pragma once

#include "spinor_gates/core/factor_code.hpp"
#include "spinor_gates/core/types.hpp"

namespace spinor_gates {

/// Product result at factor level. sign == 0 flags annihilation.
struct SignedFactor {
  int sign = 1;
  FactorKind kind = FactorKind::Identity;

  bool is_zero() const { return sign == 0; }
  bool operator==(const SignedFactor&) const = default;
};

/// eta^{aa} for the first index of the pair: eta^{00} = +1, eta^{11} = -1.
constexpr int metric_sign(Pair p) { return p == Pair::P03 ? 1 : -1; }

namespace detail {

constexpr bool same_sign(FactorKind a, FactorKind b) {
  const bool a_plus = a == FactorKind::NilPlus || a == FactorKind::ProjPlus;
  const bool b_plus = b == FactorKind::NilPlus || b == FactorKind::ProjPlus;
  return a_plus == b_plus;
}

constexpr FactorKind projector_like(FactorKind k) {
  return (k == FactorKind::NilPlus || k == FactorKind::ProjPlus) ? FactorKind::ProjPlus
                                                                  : FactorKind::ProjMinus;
}

}  // namespace detail

/// Product of two factors of the same pair.
///
///   (k)(k) = 0        (k)(-k) = eta [k]    [k][k] = [k]   [k][-k] = 0
///   (k)[k] = 0        (k)[-k] = (k)        [k](k) = (k)   [k](-k) = 0
constexpr SignedFactor factor_mul(Pair pair, FactorKind f, FactorKind g) {
  using K = FactorKind;
  if (f == K::Identity) return {1, g};
  if (g == K::Identity) return {1, f};
  const bool same = detail::same_sign(f, g);
  if (is_nilpotent(f) && is_nilpotent(g)) {
    if (same) return {0, K::Identity};
    return {metric_sign(pair), detail::projector_like(f)};
  }
  if (is_nilpotent(f)) {  // (k)[.]
    return same ? SignedFactor{0, K::Identity} : SignedFactor{1, f};
  }
  if (is_nilpotent(g)) {  // [k](.)
    return same ? SignedFactor{1, g} : SignedFactor{0, K::Identity};
  }
  return same ? SignedFactor{1, f} : SignedFactor{0, K::Identity};
}

inline SignedFactor factor_mul(FactorCode f, FactorCode g) {
  require(f.pair == g.pair, "factor_mul: factors belong to different Cartan pairs");
  return factor_mul(f.pair, f.kind, g.kind);
}

/// Hermitian conjugate of a single factor under gamma^0 hermitian and
/// gamma^{1,2,3} anti-hermitian: (+-i)^dag = (-+i), (+-)^dag = -(-+),
/// projectors are hermitian.
constexpr SignedFactor factor_dagger(Pair pair, FactorKind f) {
  if (is_nilpotent(f)) return {metric_sign(pair), flip_sign(f)};
  return {1, f};
}

inline SignedFactor factor_dagger(FactorCode f) { return factor_dagger(f.pair, f.kind); }

}  // namespace spinor_gates
