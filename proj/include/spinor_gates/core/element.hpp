#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spinor_gates/core/factor_algebra.hpp"
#include "spinor_gates/core/format.hpp"
#include "spinor_gates/core/monomial.hpp"
#include "spinor_gates/core/types.hpp"

namespace spinor_gates {

/// Product result at monomial level. sign == 0 flags annihilation.
struct SignedMonomial {
  int sign = 1;
  Monomial value;

  bool is_zero() const { return sign == 0; }
};

/// Graded product of two monomials.
///
/// Within a qubit, a12 must pass b03 (sign -1 when both are odd). Across
/// qubits, each b_l passes every a_m with m > l, contributing
/// (-1)^(parity(b_l) * sum_{m>l} parity(a_m)).
inline SignedMonomial monomial_mul(const Monomial& a, const Monomial& b) {
  require(a.size() == b.size(), "monomial_mul: qubit count mismatch");
  const int n = a.size();
  SignedMonomial out{1, Monomial(n)};
  int sign = 1;
  int suffix_parity = 0;  // parity of a_m for m > l
  for (int l = n - 1; l >= 0; --l) {
    const auto qa = a.slot(l);
    const auto qb = b.slot(l);
    const auto r03 = factor_mul(Pair::P03, qa.f03, qb.f03);
    const auto r12 = factor_mul(Pair::P12, qa.f12, qb.f12);
    if (r03.is_zero() || r12.is_zero()) return {0, Monomial(n)};
    sign *= r03.sign * r12.sign;
    if (parity(qa.f12) && parity(qb.f03)) sign = -sign;
    if (qb.parity() && suffix_parity) sign = -sign;
    suffix_parity ^= qa.parity();
    out.value.set_slot(l, {r03.kind, r12.kind});
  }
  out.sign = sign;
  return out;
}

/// Hermitian conjugate: per-factor dagger, then restore canonical order.
/// Reversing k odd factors costs (-1)^(k(k-1)/2).
inline SignedMonomial monomial_dagger(const Monomial& m) {
  SignedMonomial out{1, Monomial(m.size())};
  int odd = 0;
  for (int l = 0; l < m.size(); ++l) {
    const auto q = m.slot(l);
    const auto d03 = factor_dagger(Pair::P03, q.f03);
    const auto d12 = factor_dagger(Pair::P12, q.f12);
    out.sign *= d03.sign * d12.sign;
    odd += parity(q.f03) + parity(q.f12);
    out.value.set_slot(l, {d03.kind, d12.kind});
  }
  if ((odd * (odd - 1) / 2) % 2) out.sign = -out.sign;
  return out;
}

/// Sparse complex combination of monomials over a fixed qubit count.
class AlgebraElement {
 public:
  using TermMap = std::unordered_map<Monomial, cplx, MonomialHash>;

  AlgebraElement() = default;
  explicit AlgebraElement(int n) : n_(n) {
    require(n >= 0 && n <= kMaxQubits, "qubit count out of range");
  }
  AlgebraElement(const Monomial& m, cplx c) : n_(m.size()) { add_term(m, c); }

  static AlgebraElement zero(int n) { return AlgebraElement(n); }
  static AlgebraElement identity(int n) { return AlgebraElement(Monomial(n), 1.0); }
  static AlgebraElement scalar(int n, cplx c) { return AlgebraElement(Monomial(n), c); }

  int size() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  cplx coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? cplx{} : it->second;
  }

  void add_term(const Monomial& m, cplx c) {
    require(m.size() == n_, "add_term: qubit count mismatch");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) it->second += c;
    if (is_negligible(it->second)) terms_.erase(it);
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    require(n_ == o.n_, "element addition: qubit count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    require(n_ == o.n_, "element subtraction: qubit count mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  AlgebraElement& operator*=(cplx s) {
    if (is_negligible(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    prune();
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a) { return a *= -1.0; }
  friend AlgebraElement operator*(AlgebraElement a, cplx s) { return a *= s; }
  friend AlgebraElement operator*(cplx s, AlgebraElement a) { return a *= s; }

  /// Bilinear extension of monomial_mul.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    require(a.n_ == b.n_, "element_mul: qubit count mismatch");
    AlgebraElement out(a.n_);
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        const auto p = monomial_mul(ma, mb);
        if (p.is_zero()) continue;
        auto [it, inserted] = out.terms_.try_emplace(p.value, ca * cb * double(p.sign));
        if (!inserted) it->second += ca * cb * double(p.sign);
      }
    }
    out.prune();
    return out;
  }

  AlgebraElement dagger() const {
    AlgebraElement out(n_);
    for (const auto& [m, c] : terms_) {
      const auto d = monomial_dagger(m);
      out.add_term(d.value, std::conj(c) * double(d.sign));
    }
    return out;
  }

  /// Terms in canonical monomial order.
  std::vector<std::pair<Monomial, cplx>> sorted_terms() const {
    std::vector<std::pair<Monomial, cplx>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  }

  /// Rewrites every identity factor as [k] + [-k]. The result is expressed in
  /// a linearly independent basis ({(+),(-),[+],[-]} per pair), so two
  /// elements denote the same operator iff their expansions agree.
  AlgebraElement expanded() const {
    AlgebraElement cur = *this;
    for (int l = 0; l < n_; ++l) {
      for (const Pair p : {Pair::P03, Pair::P12}) {
        AlgebraElement next(n_);
        for (const auto& [m, c] : cur.terms_) {
          if (m.factor(l, p) != FactorKind::Identity) {
            next.add_term(m, c);
            continue;
          }
          for (const auto k : {FactorKind::ProjPlus, FactorKind::ProjMinus}) {
            Monomial e = m;
            e.set_factor(l, {p, k});
            next.add_term(e, c);
          }
        }
        cur = std::move(next);
      }
    }
    return cur;
  }

  /// Unique normal form: expand, snap coefficient components below the zero
  /// threshold, then fold every matching [k]/[-k] pair back into 1, slot by
  /// slot from qubit 1.
  AlgebraElement canonical(double tol = kZeroThreshold) const {
    AlgebraElement cur = expanded();
    for (auto& [m, c] : cur.terms_) {
      c = {std::abs(c.real()) < tol ? 0.0 : c.real(), std::abs(c.imag()) < tol ? 0.0 : c.imag()};
    }
    cur.prune();
    for (int l = 0; l < n_; ++l) {
      for (const Pair p : {Pair::P03, Pair::P12}) {
        AlgebraElement next(n_);
        for (const auto& [m, c] : cur.terms_) {
          const auto k = m.factor(l, p);
          if (k == FactorKind::ProjMinus) {
            Monomial partner = m;
            partner.set_factor(l, {p, FactorKind::ProjPlus});
            if (cur.coefficient(partner) == cplx{}) next.add_term(m, c);
            continue;  // otherwise handled with its partner
          }
          if (k != FactorKind::ProjPlus) {
            next.add_term(m, c);
            continue;
          }
          Monomial partner = m;
          partner.set_factor(l, {p, FactorKind::ProjMinus});
          const cplx cp = cur.coefficient(partner);
          if (std::abs(c - cp) <= tol * std::max(1.0, std::abs(c))) {
            Monomial merged = m;
            merged.set_factor(l, {p, FactorKind::Identity});
            next.add_term(merged, c);
          } else {
            next.add_term(m, c);
            if (cp != cplx{}) next.add_term(partner, cp);
          }
        }
        cur = std::move(next);
      }
    }
    return cur;
  }

  /// True when every term has even parity on every qubit.
  bool is_even_per_qubit() const {
    for (const auto& [m, c] : terms_) {
      for (int l = 0; l < n_; ++l) {
        if (m.slot(l).parity()) return false;
      }
    }
    return true;
  }

  double max_abs_coefficient() const {
    double mx = 0.0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, std::abs(c));
    return mx;
  }

  /// Text form of the stored terms in canonical order; parses back with
  /// the expression frontend.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : sorted_terms()) {
      std::string term = m.is_identity() ? format_coefficient(c, true)
                                         : format_coefficient(c, false) + m.to_string();
      if (out.empty()) {
        out = term;
      } else if (term.front() == '-') {
        out += " - " + term.substr(1);
      } else {
        out += " + " + term;
      }
    }
    return out;
  }

 private:
  void prune() {
    std::erase_if(terms_, [](const auto& kv) { return is_negligible(kv.second); });
  }

  int n_ = 0;
  TermMap terms_;
};

/// Operator equality up to `tol`, insensitive to 1 = [k] + [-k] rewrites.
inline bool equivalent(const AlgebraElement& a, const AlgebraElement& b,
                       double tol = kDefaultTolerance) {
  require(a.size() == b.size(), "equivalent: qubit count mismatch");
  AlgebraElement diff = a;
  diff -= b;
  return diff.expanded().max_abs_coefficient() <= tol;
}

}  // namespace spinor_gates
