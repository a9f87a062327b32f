#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "spinor_gates/core/monomial.hpp"
#include "spinor_gates/core/types.hpp"

namespace spinor_gates {

/// Chiral: definite handedness per qubit. Parity: the (|bL> +- |bR>)/sqrt2
/// combinations.
enum class Rep : std::uint8_t { Chiral, Parity };

enum class Sector : std::uint8_t { Left, Right, ParityPlus, ParityMinus };

constexpr Rep rep_of(Sector s) {
  return (s == Sector::Left || s == Sector::Right) ? Rep::Chiral : Rep::Parity;
}

/// Sector bit 0 is Left / ParityPlus, 1 is Right / ParityMinus.
constexpr int sector_bit(Sector s) {
  return (s == Sector::Right || s == Sector::ParityMinus) ? 1 : 0;
}

constexpr Sector sector_from_bit(Rep rep, int b) {
  if (rep == Rep::Chiral) return b ? Sector::Right : Sector::Left;
  return b ? Sector::ParityMinus : Sector::ParityPlus;
}

constexpr char sector_char(Sector s) {
  switch (s) {
    case Sector::Left: return 'L';
    case Sector::Right: return 'R';
    case Sector::ParityPlus: return '+';
    default: return '-';
  }
}

inline std::optional<Sector> sector_from_char(char c) {
  switch (c) {
    case 'L': return Sector::Left;
    case 'R': return Sector::Right;
    case '+': return Sector::ParityPlus;
    case '-': return Sector::ParityMinus;
    default: return std::nullopt;
  }
}

/// Per-qubit (bit, sector) label of an n-qubit basis state.
///
/// Qubit l (1-based) lives at bit position n - l, so `bits` read as an
/// integer is the bitstring with qubit 1 most significant.
struct BasisLabel {
  int n = 0;
  Rep rep = Rep::Chiral;
  std::uint32_t bits = 0;
  std::uint32_t sectors = 0;

  int bit(int l) const { return static_cast<int>((bits >> (n - l)) & 1u); }
  Sector sector(int l) const {
    return sector_from_bit(rep, static_cast<int>((sectors >> (n - l)) & 1u));
  }

  void set_bit(int l, int b) {
    const std::uint32_t mask = 1u << (n - l);
    bits = b ? (bits | mask) : (bits & ~mask);
  }
  void set_sector(int l, Sector s) {
    require(rep_of(s) == rep, "sector does not belong to the label's representation");
    const std::uint32_t mask = 1u << (n - l);
    sectors = sector_bit(s) ? (sectors | mask) : (sectors & ~mask);
  }

  std::string bitstring() const {
    std::string s;
    for (int l = 1; l <= n; ++l) s += bit(l) ? '1' : '0';
    return s;
  }
  std::string sector_string() const {
    std::string s;
    for (int l = 1; l <= n; ++l) s += sector_char(sector(l));
    return s;
  }

  bool operator==(const BasisLabel&) const = default;
  std::strong_ordering operator<=>(const BasisLabel& o) const {
    if (auto c = n <=> o.n; c != 0) return c;
    if (auto c = rep <=> o.rep; c != 0) return c;
    if (auto c = bits <=> o.bits; c != 0) return c;
    return sectors <=> o.sectors;
  }
};

/// Label with the same sector on every qubit.
inline BasisLabel uniform_label(int n, std::uint32_t bits, Sector s) {
  require(n >= 1 && n <= kMaxQubits, "qubit count out of range");
  require(bits < (1u << n), "bit pattern wider than qubit count");
  BasisLabel lab{n, rep_of(s), bits, 0};
  if (sector_bit(s)) lab.sectors = (1u << n) - 1u;
  return lab;
}

/// Parses "0110" with a sector string such as "LLRL" or a single sector char
/// applied to all qubits.
inline BasisLabel parse_label(std::string_view bitstring, std::string_view sectors) {
  const int n = static_cast<int>(bitstring.size());
  require(n >= 1 && n <= kMaxQubits, "bitstring length out of range");
  require(sectors.size() == 1 || static_cast<int>(sectors.size()) == n,
          "sector string must have one entry or one per qubit");
  const auto first = sector_from_char(sectors.front());
  require(first.has_value(), "unknown sector character");
  BasisLabel lab{n, rep_of(*first), 0, 0};
  for (int l = 1; l <= n; ++l) {
    const char b = bitstring[l - 1];
    require(b == '0' || b == '1', "bitstring must contain only 0 and 1");
    lab.set_bit(l, b == '1');
    const auto s = sector_from_char(sectors.size() == 1 ? sectors.front() : sectors[l - 1]);
    require(s.has_value(), "unknown sector character");
    lab.set_sector(l, *s);
  }
  return lab;
}

/// Per-qubit chiral monomials:
///   (0,L) = [-i](+)   (1,L) = (+i)[-]   (0,R) = (+i)(+)   (1,R) = [-i][-]
inline QubitFactorPair chiral_factors(int bit, Sector s) {
  using K = FactorKind;
  const bool left = s == Sector::Left;
  if (bit == 0) return left ? QubitFactorPair{K::ProjMinus, K::NilPlus}
                            : QubitFactorPair{K::NilPlus, K::NilPlus};
  return left ? QubitFactorPair{K::NilPlus, K::ProjMinus}
              : QubitFactorPair{K::ProjMinus, K::ProjMinus};
}

inline Monomial label_monomial(const BasisLabel& lab) {
  require(lab.rep == Rep::Chiral, "only chiral labels map to a single monomial");
  Monomial m(lab.n);
  for (int l = 1; l <= lab.n; ++l) m.set_slot(l - 1, chiral_factors(lab.bit(l), lab.sector(l)));
  return m;
}

/// Inverse of label_monomial; nullopt when some qubit is outside the state basis.
inline std::optional<BasisLabel> monomial_label(const Monomial& m) {
  using K = FactorKind;
  const int n = m.size();
  BasisLabel lab{n, Rep::Chiral, 0, 0};
  for (int l = 1; l <= n; ++l) {
    const auto q = m.slot(l - 1);
    int bit;
    if (q.f12 == K::NilPlus) bit = 0;
    else if (q.f12 == K::ProjMinus) bit = 1;
    else return std::nullopt;
    Sector s;
    if (q.f03 == K::ProjMinus) s = bit == 0 ? Sector::Left : Sector::Right;
    else if (q.f03 == K::NilPlus) s = bit == 0 ? Sector::Right : Sector::Left;
    else return std::nullopt;
    lab.set_bit(l, bit);
    lab.set_sector(l, s);
  }
  return lab;
}

}  // namespace spinor_gates
