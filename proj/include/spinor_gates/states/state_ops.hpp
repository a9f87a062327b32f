#pragma once

#include <array>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spinor_gates/core/element.hpp"
#include "spinor_gates/core/generators.hpp"
#include "spinor_gates/states/ladder.hpp"
#include "spinor_gates/states/state_vector.hpp"

namespace spinor_gates {

/// Per-qubit unitary between the chiral and parity bases. The 2x2 map on the
/// sector bit is (1/sqrt2)[[1, 1], [1, -1]] in both directions, so applying
/// it twice is the identity.
inline StateVector change_rep(const StateVector& s, Rep target) {
  if (s.rep() == target) return s;
  const int n = s.size();
  const double h = 1.0 / std::numbers::sqrt2;
  StateVector::AmplitudeMap cur = s.amplitudes();
  for (int l = 1; l <= n; ++l) {
    StateVector::AmplitudeMap next;
    for (const auto& [lab, a] : cur) {
      const int sb = (lab.sectors >> (n - l)) & 1u;
      for (int out_bit = 0; out_bit < 2; ++out_bit) {
        BasisLabel o = lab;
        const std::uint32_t mask = 1u << (n - l);
        o.sectors = out_bit ? (o.sectors | mask) : (o.sectors & ~mask);
        const double m = (out_bit && sb) ? -h : h;
        next[o] += m * a;
      }
    }
    cur = std::move(next);
  }
  StateVector out(n, target);
  for (const auto& [key, a] : cur) {
    BasisLabel lab = key;
    lab.rep = target;
    out.add(lab, a);
  }
  return out;
}

namespace detail {

inline StateVector apply_chiral(const AlgebraElement& op, const StateVector& s);

/// Parity-rep action through the chiral basis. Handles every element; the
/// intermediate state has up to 2^n chiral labels per parity label.
inline StateVector apply_via_chiral(const AlgebraElement& op, const StateVector& s) {
  return change_rep(apply_chiral(op, change_rep(s, Rep::Chiral)), Rep::Parity);
}

/// Image of one-qubit parity basis state (bit, sector) under one slot.
using LocalImage = std::vector<std::pair<BasisLabel, cplx>>;

inline const LocalImage& parity_local_image(QubitFactorPair q, int bit, Sector sector) {
  static const auto table = [] {
    std::array<LocalImage, 5 * 5 * 2 * 2> t;
    for (const FactorKind f03 : kAllKinds) {
      for (const FactorKind f12 : kAllKinds) {
        Monomial m(1);
        m.set_slot(0, {f03, f12});
        for (int b = 0; b < 2; ++b) {
          for (const Sector sec : {Sector::ParityPlus, Sector::ParityMinus}) {
            const auto img = apply_via_chiral(AlgebraElement(m, 1.0),
                                              basis_state(uniform_label(1, static_cast<std::uint32_t>(b), sec)));
            auto& slot = t[((static_cast<int>(f03) * 5 + static_cast<int>(f12)) * 2 + b) * 2 +
                           (sec == Sector::ParityMinus ? 1 : 0)];
            for (const auto& [lab, a] : img.amplitudes()) slot.emplace_back(lab, a);
          }
        }
      }
    }
    return t;
  }();
  return table[((static_cast<int>(q.f03) * 5 + static_cast<int>(q.f12)) * 2 + bit) * 2 +
               (sector == Sector::ParityMinus ? 1 : 0)];
}

/// Parity-rep action of an element that is even on every qubit. Such terms
/// pick up no reordering signs across qubits, so each term acts as a tensor
/// product of one-qubit images and the state never leaves the parity basis.
inline StateVector apply_parity_local(const AlgebraElement& op, const StateVector& s) {
  const int n = s.size();
  StateVector out(n, Rep::Parity);
  std::vector<std::pair<BasisLabel, cplx>> partial;
  std::vector<std::pair<BasisLabel, cplx>> next;
  for (const auto& [lab, amp] : s.amplitudes()) {
    for (const auto& [m, c] : op.terms()) {
      partial.assign(1, {lab, c * amp});
      for (int l = 1; l <= n && !partial.empty(); ++l) {
        const auto q = m.slot(l - 1);
        if (q.is_identity()) continue;
        const auto& images = parity_local_image(q, lab.bit(l), lab.sector(l));
        next.clear();
        for (const auto& [pl, pc] : partial) {
          for (const auto& [il, ic] : images) {
            BasisLabel o = pl;
            o.set_bit(l, il.bit(1));
            o.set_sector(l, il.sector(1));
            next.emplace_back(o, pc * ic);
          }
        }
        partial.swap(next);
      }
      for (const auto& [pl, pc] : partial) out.add(pl, pc);
    }
  }
  return out;
}

inline StateVector apply_chiral(const AlgebraElement& op, const StateVector& s) {
  StateVector out(s.size(), Rep::Chiral);
  for (const auto& [lab, amp] : s.amplitudes()) {
    const Monomial sm = label_monomial(lab);
    for (const auto& [m, c] : op.terms()) {
      const auto p = monomial_mul(m, sm);
      if (p.is_zero()) continue;
      const auto target = monomial_label(p.value);
      if (!target) throw std::logic_error("apply: product left the state basis: " + p.value.to_string());
      out.add(*target, c * amp * double(p.sign));
    }
  }
  return out;
}

}  // namespace detail

/// Left action of an element on a state. Parity-rep states are acted on
/// qubit by qubit when the element is even on every qubit, and otherwise
/// mapped to the chiral basis, acted on, and mapped back.
inline StateVector apply(const AlgebraElement& op, const StateVector& s) {
  require(op.size() == s.size(), "apply: qubit count mismatch");
  if (s.rep() == Rep::Chiral) return detail::apply_chiral(op, s);
  if (op.is_even_per_qubit()) return detail::apply_parity_local(op, s);
  return detail::apply_via_chiral(op, s);
}

/// All qubits 0, in the given sector.
inline StateVector all_zeros(int n, Sector sector) { return basis_state(uniform_label(n, 0, sector)); }

/// prod_l (tau-_l)^{bit_l} |0...0>; bits[0] is qubit 1.
inline StateVector build_from_bits(std::span<const int> bits, Sector sector) {
  const int n = static_cast<int>(bits.size());
  StateVector s = all_zeros(n, sector);
  for (int l = 1; l <= n; ++l) {
    require(bits[l - 1] == 0 || bits[l - 1] == 1, "bits must be 0 or 1");
    if (bits[l - 1]) s = apply(tau_operator(TauKind::Minus, l, n), s);
  }
  return s;
}

struct HandednessEntry {
  BasisLabel label;
  cplx amplitude;
  std::vector<int> per_qubit;  // -1 left, +1 right
};

/// Eigenvalue of Gamma_l for every qubit of every component of a chiral state.
inline std::vector<HandednessEntry> handedness(const StateVector& s) {
  require(s.rep() == Rep::Chiral, "handedness: chiral representation required");
  const int n = s.size();
  std::vector<AlgebraElement> gammas;
  for (int l = 1; l <= n; ++l) gammas.push_back(handedness_operator(l, n));
  std::vector<HandednessEntry> out;
  for (const auto& [lab, amp] : s.amplitudes()) {
    HandednessEntry e{lab, amp, {}};
    const auto b = basis_state(lab);
    for (int l = 1; l <= n; ++l) {
      const auto g = apply(gammas[l - 1], b);
      const cplx ev = g.amplitude(lab);
      if (g.amplitudes().size() != 1 || std::abs(std::abs(ev) - 1.0) > kDefaultTolerance) {
        throw std::logic_error("handedness: basis label is not a Gamma eigenstate");
      }
      e.per_qubit.push_back(ev.real() > 0 ? 1 : -1);
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace spinor_gates
