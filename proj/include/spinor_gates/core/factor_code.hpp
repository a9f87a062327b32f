#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace spinor_gates {

/// The two Cartan pairs of one spinor: (gamma^0, gamma^3) and (gamma^1, gamma^2).
enum class Pair : std::uint8_t { P03 = 0, P12 = 1 };

/// Per-pair basis objects. For the 03 pair these are 1, (+i), (-i), [+i], [-i];
/// for the 12 pair 1, (+), (-), [+], [-].
enum class FactorKind : std::uint8_t {
  Identity = 0,
  NilPlus = 1,
  NilMinus = 2,
  ProjPlus = 3,
  ProjMinus = 4,
};

inline constexpr std::array<FactorKind, 5> kAllKinds = {
    FactorKind::Identity, FactorKind::NilPlus, FactorKind::NilMinus,
    FactorKind::ProjPlus, FactorKind::ProjMinus};

constexpr bool is_nilpotent(FactorKind k) {
  return k == FactorKind::NilPlus || k == FactorKind::NilMinus;
}

constexpr bool is_projector(FactorKind k) {
  return k == FactorKind::ProjPlus || k == FactorKind::ProjMinus;
}

/// Nilpotents are binomials of single gammas, hence Clifford odd.
constexpr int parity(FactorKind k) { return is_nilpotent(k) ? 1 : 0; }

/// k -> -k, keeping the nilpotent/projector type.
constexpr FactorKind flip_sign(FactorKind k) {
  switch (k) {
    case FactorKind::NilPlus: return FactorKind::NilMinus;
    case FactorKind::NilMinus: return FactorKind::NilPlus;
    case FactorKind::ProjPlus: return FactorKind::ProjMinus;
    case FactorKind::ProjMinus: return FactorKind::ProjPlus;
    default: return k;
  }
}

struct FactorCode {
  Pair pair = Pair::P03;
  FactorKind kind = FactorKind::Identity;

  constexpr int parity() const { return spinor_gates::parity(kind); }
  constexpr bool operator==(const FactorCode&) const = default;
};

inline constexpr std::string_view symbol(FactorCode f) {
  constexpr std::array<std::string_view, 5> s03 = {"1", "(+i)", "(-i)", "[+i]", "[-i]"};
  constexpr std::array<std::string_view, 5> s12 = {"1", "(+)", "(-)", "[+]", "[-]"};
  const auto idx = static_cast<std::size_t>(f.kind);
  return f.pair == Pair::P03 ? s03[idx] : s12[idx];
}

/// One qubit's slot in a monomial: the 03 factor sits left of the 12 factor.
struct QubitFactorPair {
  FactorKind f03 = FactorKind::Identity;
  FactorKind f12 = FactorKind::Identity;

  constexpr int parity() const { return (spinor_gates::parity(f03) + spinor_gates::parity(f12)) & 1; }
  constexpr bool is_identity() const {
    return f03 == FactorKind::Identity && f12 == FactorKind::Identity;
  }
  constexpr bool operator==(const QubitFactorPair&) const = default;
};

}  // namespace spinor_gates
