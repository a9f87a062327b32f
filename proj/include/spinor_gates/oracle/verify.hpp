#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "spinor_gates/core/element.hpp"
#include "spinor_gates/core/generators.hpp"
#include "spinor_gates/oracle/gamma_matrices.hpp"
#include "spinor_gates/states/basis_label.hpp"
#include "spinor_gates/states/ladder.hpp"

namespace spinor_gates::oracle {

struct TableCheck {
  std::string name;
  int passed = 0;
  int failed = 0;
  double max_deviation = 0.0;
  std::vector<std::string> mismatches{};  // first few only

  void record(bool ok, double deviation, const std::function<std::string()>& describe) {
    max_deviation = std::max(max_deviation, deviation);
    if (ok) {
      ++passed;
    } else {
      ++failed;
      if (mismatches.size() < 8) mismatches.push_back(describe());
    }
  }
};

struct VerifyReport {
  double tolerance = kDefaultTolerance;
  std::vector<TableCheck> checks;

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const TableCheck& c) { return c.failed == 0; });
  }
  int total_failed() const {
    int f = 0;
    for (const auto& c : checks) f += c.failed;
    return f;
  }
};

inline DenseMatrix element_matrix(const AlgebraElement& e, const GradedEmbedding& emb) {
  DenseMatrix out = DenseMatrix::Zero(emb.dimension(), emb.dimension());
  for (const auto& [m, c] : e.terms()) out += c * emb.monomial(m);
  return out;
}

inline double deviation(const DenseMatrix& a, const DenseMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// All same-pair factor products against 4x4 matrix products.
inline TableCheck check_factor_products(Pair pair, double tol) {
  TableCheck c{.name = pair == Pair::P03 ? "factor_products_03" : "factor_products_12"};
  for (const auto f : kAllKinds) {
    for (const auto g : kAllKinds) {
      const FactorCode a{pair, f}, b{pair, g};
      const auto r = factor_mul(a, b);
      const DenseMatrix expected = factor_matrix(a) * factor_matrix(b);
      const DenseMatrix actual =
          r.is_zero() ? DenseMatrix(DenseMatrix::Zero(4, 4)) : DenseMatrix(double(r.sign) * factor_matrix({pair, r.kind}));
      const double d = deviation(expected, actual);
      c.record(d <= tol, d, [&] { return std::string(symbol(a)) + std::string(symbol(b)); });
    }
  }
  return c;
}

inline TableCheck check_dagger_table(double tol) {
  TableCheck c{.name = "dagger"};
  for (const Pair pair : {Pair::P03, Pair::P12}) {
    for (const auto k : kAllKinds) {
      const FactorCode f{pair, k};
      const auto r = factor_dagger(f);
      const double d = deviation(factor_matrix(f).adjoint(), double(r.sign) * factor_matrix({pair, r.kind}));
      c.record(d <= tol, d, [&] { return std::string(symbol(f)) + "^dag"; });
    }
  }
  return c;
}

/// Gamma and S^ab elements, the handedness operator, and its basic
/// properties (square one, traceless).
inline TableCheck check_generators(double tol) {
  TableCheck c{.name = "generators"};
  const GradedEmbedding emb(1);
  for (int a = 0; a < 4; ++a) {
    const double d = deviation(element_matrix(gamma_as_element(a, 1, 1), emb), gamma_matrix(a));
    c.record(d <= tol, d, [&] { return "gamma" + std::to_string(a); });
  }
  const double d03 = deviation(element_matrix(cartan_generator(Pair::P03, 1, 1), emb), generator_matrix(0, 3));
  c.record(d03 <= tol, d03, [] { return std::string("S03"); });
  const double d12 = deviation(element_matrix(cartan_generator(Pair::P12, 1, 1), emb), generator_matrix(1, 2));
  c.record(d12 <= tol, d12, [] { return std::string("S12"); });
  const DenseMatrix hand = handedness_matrix();
  const double dh = deviation(element_matrix(handedness_operator(1, 1), emb), hand);
  c.record(dh <= tol, dh, [] { return std::string("Gamma"); });
  const double dsq = deviation(hand * hand, DenseMatrix::Identity(4, 4));
  c.record(dsq <= tol, dsq, [] { return std::string("Gamma^2"); });
  const double tr = std::abs(hand.trace());
  c.record(tr <= tol, tr, [] { return std::string("tr Gamma"); });
  return c;
}

/// Ladder identities: each listed equality is checked through the symbolic
/// product and through the matrix product of the factors.
inline TableCheck check_ladder_identities(double tol) {
  TableCheck c{.name = "ladder_identities"};
  const GradedEmbedding emb(1);
  const auto one = AlgebraElement::identity(1);
  const auto zero = AlgebraElement::zero(1);
  const auto pp = projector12(true, 1, 1);
  const auto pm = projector12(false, 1, 1);
  struct Family {
    const char* name;
    TauKind plus, minus;
    bool combined;
  };
  const Family families[] = {{"tau", TauKind::Plus, TauKind::Minus, true},
                             {"tauL", TauKind::LPlus, TauKind::LMinus, false},
                             {"tauR", TauKind::RPlus, TauKind::RMinus, false}};
  for (const auto& fam : families) {
    const auto tp = tau_operator(fam.plus, 1, 1);
    const auto tm = tau_operator(fam.minus, 1, 1);
    struct Identity {
      std::string label;
      std::vector<AlgebraElement> lhs;  // product of these, left to right
      AlgebraElement rhs;
    };
    std::vector<Identity> ids = {
        {"(+)^2=0", {tp, tp}, zero},          {"(-)^2=0", {tm, tm}, zero},
        {"(+)[+]=0", {tp, pp}, zero},         {"(-)[-]=0", {tm, pm}, zero},
        {"[+](-)=0", {pp, tm}, zero},         {"[-](+)=0", {pm, tp}, zero},
        {"(+)[-]=(+)", {tp, pm}, tp},         {"(-)[+]=(-)", {tm, pp}, tm},
        {"[+](+)=(+)", {pp, tp}, tp},         {"[-](-)=(-)", {pm, tm}, tm},
    };
    if (fam.combined) {
      ids.push_back({"(+)(-)=[+]", {tp, tm}, pp});
      ids.push_back({"(-)(+)=[-]", {tm, tp}, pm});
      ids.push_back({"((+)+(-))^2=I", {tp + tm, tp + tm}, one});
    }
    for (const auto& id : ids) {
      AlgebraElement sym = id.lhs.front();
      DenseMatrix mat = element_matrix(id.lhs.front(), emb);
      for (std::size_t i = 1; i < id.lhs.size(); ++i) {
        sym = sym * id.lhs[i];
        mat = mat * element_matrix(id.lhs[i], emb);
      }
      const DenseMatrix rhs = element_matrix(id.rhs, emb);
      const double d = std::max(deviation(element_matrix(sym, emb), rhs), deviation(mat, rhs));
      c.record(d <= tol, d, [&] { return std::string(fam.name) + " " + id.label; });
    }
    for (const auto& [x, y, label] : {std::tuple{tp, tm, "(+)^dag=(-)"}, std::tuple{tm, tp, "(-)^dag=(+)"}}) {
      const DenseMatrix target = element_matrix(y, emb);
      const double d = std::max(deviation(element_matrix(x.dagger(), emb), target),
                                deviation(element_matrix(x, emb).adjoint(), target));
      c.record(d <= tol, d, [&] { return std::string(fam.name) + " " + label; });
    }
  }
  return c;
}

/// Every monomial of one qubit's 25 factor pairs placed on qubit l.
inline std::vector<Monomial> all_monomials(int n) {
  std::vector<Monomial> out{Monomial(n)};
  for (int l = 0; l < n; ++l) {
    std::vector<Monomial> next;
    for (const auto& m : out) {
      for (const auto a : kAllKinds) {
        for (const auto b : kAllKinds) {
          Monomial e = m;
          e.set_slot(l, {a, b});
          next.push_back(e);
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Symbolic monomial products against the graded embedding, for every pair
/// drawn from `monomials`.
inline TableCheck check_monomial_products(const std::string& name, const std::vector<Monomial>& monomials,
                                          double tol) {
  TableCheck c{.name = name};
  if (monomials.empty()) return c;
  const GradedEmbedding emb(monomials.front().size());
  std::vector<DenseMatrix> mats;
  mats.reserve(monomials.size());
  for (const auto& m : monomials) mats.push_back(emb.monomial(m));
  const DenseMatrix zero = DenseMatrix::Zero(emb.dimension(), emb.dimension());
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    for (std::size_t j = 0; j < monomials.size(); ++j) {
      const auto r = monomial_mul(monomials[i], monomials[j]);
      const DenseMatrix actual = r.is_zero() ? zero : DenseMatrix(double(r.sign) * emb.monomial(r.value));
      const double d = deviation(mats[i] * mats[j], actual);
      c.record(d <= tol, d, [&] { return monomials[i].to_string() + " x " + monomials[j].to_string(); });
    }
  }
  return c;
}

/// n = 2 sweep over all pairs of odd monomials.
inline TableCheck check_cross_qubit_signs(double tol) {
  std::vector<Monomial> odd;
  for (const auto& m : all_monomials(2)) {
    if (m.parity()) odd.push_back(m);
  }
  return check_monomial_products("cross_qubit_odd_products", odd, tol);
}

/// Left action on the chiral state monomials stays in the state basis and
/// matches matrix multiplication, n = 2, all 625 operator monomials.
inline TableCheck check_state_closure(double tol) {
  TableCheck c{.name = "state_closure"};
  const int n = 2;
  const GradedEmbedding emb(n);
  const DenseMatrix zero = DenseMatrix::Zero(emb.dimension(), emb.dimension());
  for (std::uint32_t bits = 0; bits < 4; ++bits) {
    for (std::uint32_t sectors = 0; sectors < 4; ++sectors) {
      const BasisLabel lab{n, Rep::Chiral, bits, sectors};
      const Monomial s = label_monomial(lab);
      const DenseMatrix sm = emb.monomial(s);
      for (const auto& m : all_monomials(n)) {
        const auto r = monomial_mul(m, s);
        bool closed = r.is_zero() || monomial_label(r.value).has_value();
        const DenseMatrix actual = r.is_zero() ? zero : DenseMatrix(double(r.sign) * emb.monomial(r.value));
        const double d = deviation(emb.monomial(m) * sm, actual);
        c.record(closed && d <= tol, d, [&] { return m.to_string() + " on " + s.to_string(); });
      }
    }
  }
  return c;
}

/// Full oracle sweep.
inline VerifyReport verify_tables(double tol = kDefaultTolerance) {
  VerifyReport r;
  r.tolerance = tol;
  r.checks.push_back(check_factor_products(Pair::P03, tol));
  r.checks.push_back(check_factor_products(Pair::P12, tol));
  r.checks.push_back(check_dagger_table(tol));
  r.checks.push_back(check_generators(tol));
  r.checks.push_back(check_ladder_identities(tol));
  r.checks.push_back(check_cross_qubit_signs(tol));
  r.checks.push_back(check_state_closure(tol));
  return r;
}

}  // namespace spinor_gates::oracle
