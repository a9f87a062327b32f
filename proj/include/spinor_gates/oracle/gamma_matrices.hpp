#pragma once

// Dense-matrix model of the algebra. Deliberately independent of the
// symbolic reduction code: only the factor/monomial data types are shared.

#include <Eigen/Dense>

#include "spinor_gates/core/factor_code.hpp"
#include "spinor_gates/core/monomial.hpp"
#include "spinor_gates/core/types.hpp"

namespace spinor_gates::oracle {

using DenseMatrix = Eigen::MatrixXcd;

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Chiral (Weyl) representation:
///   g0 = [[0, I], [I, 0]],   gk = [[0, sigma_k], [-sigma_k, 0]].
/// g0 is hermitian and g1, g2, g3 are anti-hermitian.
inline DenseMatrix gamma_matrix(int a) {
  require(a >= 0 && a <= 3, "gamma index out of range");
  const cplx o{0, 0}, l{1, 0}, i{0, 1};
  Eigen::Matrix2cd sigma;
  switch (a) {
    case 0: sigma << l, o, o, l; break;
    case 1: sigma << o, l, l, o; break;
    case 2: sigma << o, -i, i, o; break;
    default: sigma << l, o, o, -l; break;
  }
  DenseMatrix g = DenseMatrix::Zero(4, 4);
  g.block(0, 2, 2, 2) = sigma;
  g.block(2, 0, 2, 2) = a == 0 ? Eigen::Matrix2cd(sigma) : Eigen::Matrix2cd(-sigma);
  return g;
}

/// Binomial for one factor, built from the supplied gamma matrices
/// (g[0..3]) and identity `id`:
///   (+-i) = (g0 -+ g3)/2,  [+-i] = (1 +- g0 g3)/2,
///   (+-)  = (g1 +- i g2)/2, [+-]  = (1 +- i g1 g2)/2.
inline DenseMatrix factor_from_gammas(FactorCode f, const DenseMatrix (&g)[4], const DenseMatrix& id) {
  const cplx i{0, 1};
  const bool p03 = f.pair == Pair::P03;
  switch (f.kind) {
    case FactorKind::Identity: return id;
    case FactorKind::NilPlus: return p03 ? DenseMatrix(0.5 * (g[0] - g[3])) : DenseMatrix(0.5 * (g[1] + i * g[2]));
    case FactorKind::NilMinus: return p03 ? DenseMatrix(0.5 * (g[0] + g[3])) : DenseMatrix(0.5 * (g[1] - i * g[2]));
    case FactorKind::ProjPlus: return p03 ? DenseMatrix(0.5 * (id + g[0] * g[3])) : DenseMatrix(0.5 * (id + i * g[1] * g[2]));
    case FactorKind::ProjMinus: return p03 ? DenseMatrix(0.5 * (id - g[0] * g[3])) : DenseMatrix(0.5 * (id - i * g[1] * g[2]));
  }
  return id;
}

inline DenseMatrix factor_matrix(FactorCode f) {
  const DenseMatrix g[4] = {gamma_matrix(0), gamma_matrix(1), gamma_matrix(2), gamma_matrix(3)};
  return factor_from_gammas(f, g, DenseMatrix::Identity(4, 4));
}

/// S^ab = (i/2) g^a g^b on one spinor.
inline DenseMatrix generator_matrix(int a, int b) {
  return cplx{0, 0.5} * gamma_matrix(a) * gamma_matrix(b);
}

/// Gamma = -4i S^03 S^12 on one spinor.
inline DenseMatrix handedness_matrix() {
  return cplx{0, -4} * generator_matrix(0, 3) * generator_matrix(1, 2);
}

/// gamma^a for spinor l (1-based) among n: Gamma x ... x Gamma x g^a x 1 x ... x 1.
/// The handedness prefix makes odd elements of different spinors anticommute.
inline DenseMatrix embedded_gamma(int a, int l, int n) {
  require(l >= 1 && l <= n && n <= 4, "embedded_gamma: spinor index out of range (n <= 4)");
  const DenseMatrix hand = handedness_matrix();
  DenseMatrix out = DenseMatrix::Identity(1, 1);
  for (int s = 1; s <= n; ++s) {
    const DenseMatrix piece = s < l ? hand : (s == l ? gamma_matrix(a) : DenseMatrix(DenseMatrix::Identity(4, 4)));
    out = kron(out, piece);
  }
  return out;
}

/// Matrices of every factor of every spinor in an n-spinor embedding.
class GradedEmbedding {
 public:
  explicit GradedEmbedding(int n) : n_(n) {
    require(n >= 1 && n <= 4, "GradedEmbedding: 1 <= n <= 4");
    const auto dim = static_cast<Eigen::Index>(1) << (2 * n);
    const DenseMatrix id = DenseMatrix::Identity(dim, dim);
    identity_ = id;
    for (int l = 1; l <= n; ++l) {
      const DenseMatrix g[4] = {embedded_gamma(0, l, n), embedded_gamma(1, l, n),
                                embedded_gamma(2, l, n), embedded_gamma(3, l, n)};
      for (const Pair p : {Pair::P03, Pair::P12}) {
        for (const auto k : kAllKinds) {
          factors_[index(l, p, k)] = factor_from_gammas({p, k}, g, id);
        }
      }
    }
  }

  int size() const { return n_; }
  Eigen::Index dimension() const { return identity_.rows(); }

  const DenseMatrix& factor(FactorCode f, int l) const { return factors_[index(l, f.pair, f.kind)]; }

  /// Ordered product: qubit 1 first, 03 before 12 within a qubit.
  DenseMatrix monomial(const Monomial& m) const {
    require(m.size() == n_, "GradedEmbedding: qubit count mismatch");
    DenseMatrix out = identity_;
    for (int l = 1; l <= n_; ++l) {
      const auto q = m.slot(l - 1);
      if (q.f03 != FactorKind::Identity) out = out * factor({Pair::P03, q.f03}, l);
      if (q.f12 != FactorKind::Identity) out = out * factor({Pair::P12, q.f12}, l);
    }
    return out;
  }

 private:
  static std::size_t index(int l, Pair p, FactorKind k) {
    return static_cast<std::size_t>((l - 1) * 10 + static_cast<int>(p) * 5 + static_cast<int>(k));
  }

  int n_;
  DenseMatrix identity_;
  DenseMatrix factors_[40];
};

}  // namespace spinor_gates::oracle
