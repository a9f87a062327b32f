#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "spinor_gates/core/factor_code.hpp"
#include "spinor_gates/core/types.hpp"

namespace spinor_gates {

/// Ordered product of per-qubit factor pairs, qubit 1 leftmost.
///
/// Each factor takes 3 bits, each qubit 6 bits; ten qubits share one 64-bit
/// word. Slot accessors are 0-based (slot 0 is qubit 1). Unused slots hold
/// the identity, so two monomials over the same n compare equal iff their
/// words do.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n) : n_(n) {
    require(n >= 0 && n <= kMaxQubits, "qubit count out of range: " + std::to_string(n));
  }

  int size() const { return n_; }

  QubitFactorPair slot(int i) const {
    const auto bits = (words_[word_of(i)] >> shift_of(i)) & 0x3Fu;
    return {static_cast<FactorKind>(bits & 0x7u), static_cast<FactorKind>(bits >> 3)};
  }

  FactorKind factor(int i, Pair p) const {
    const auto q = slot(i);
    return p == Pair::P03 ? q.f03 : q.f12;
  }

  void set_slot(int i, QubitFactorPair q) {
    require(i >= 0 && i < n_, "slot index out of range");
    const std::uint64_t bits =
        static_cast<std::uint64_t>(q.f03) | (static_cast<std::uint64_t>(q.f12) << 3);
    auto& w = words_[word_of(i)];
    w &= ~(std::uint64_t{0x3F} << shift_of(i));
    w |= bits << shift_of(i);
  }

  void set_factor(int i, FactorCode f) {
    auto q = slot(i);
    (f.pair == Pair::P03 ? q.f03 : q.f12) = f.kind;
    set_slot(i, q);
  }

  int parity() const {
    int p = 0;
    for (int i = 0; i < n_; ++i) p ^= slot(i).parity();
    return p;
  }

  bool is_identity() const { return words_[0] == 0 && words_[1] == 0; }

  const std::array<std::uint64_t, 2>& words() const { return words_; }

  bool operator==(const Monomial& o) const { return n_ == o.n_ && words_ == o.words_; }

  /// Slot-wise order from qubit 1, identity first; used for canonical printing.
  std::strong_ordering operator<=>(const Monomial& o) const {
    if (auto c = n_ <=> o.n_; c != 0) return c;
    for (int i = 0; i < n_; ++i) {
      const auto a = slot(i);
      const auto b = o.slot(i);
      if (auto c = a.f03 <=> b.f03; c != 0) return c;
      if (auto c = a.f12 <=> b.f12; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  /// "[-i]@1*(+)@1", or "1" for the identity.
  std::string to_string() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
      const auto q = slot(i);
      for (const auto f : {FactorCode{Pair::P03, q.f03}, FactorCode{Pair::P12, q.f12}}) {
        if (f.kind == FactorKind::Identity) continue;
        if (!out.empty()) out += '*';
        out += symbol(f);
        out += '@';
        out += std::to_string(i + 1);
      }
    }
    return out.empty() ? "1" : out;
  }

 private:
  static int word_of(int i) { return i / 10; }
  static int shift_of(int i) { return 6 * (i % 10); }

  int n_ = 0;
  std::array<std::uint64_t, 2> words_{};
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t seed = std::hash<std::uint64_t>{}(m.words()[0]);
    seed ^= std::hash<std::uint64_t>{}(m.words()[1]) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
            (seed >> 2);
    return seed ^ static_cast<std::size_t>(m.size());
  }
};

/// Monomial acting only on `slot` with the given pair of factors.
inline Monomial single_qubit_monomial(int n, int slot, QubitFactorPair q) {
  Monomial m(n);
  m.set_slot(slot, q);
  return m;
}

}  // namespace spinor_gates
