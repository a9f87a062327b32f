#pragma once

// Textbook qubit simulator over dense 2^p amplitude vectors. Shares only the
// GateSpec/Circuit data types with the symbolic side.

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinor_gates/gates/gate_spec.hpp"
#include "spinor_gates/oracle/gamma_matrices.hpp"

namespace spinor_gates::oracle {

inline constexpr int kMaxReferenceQubits = 12;

using Vector = Eigen::VectorXcd;

inline Eigen::Matrix2cd hadamard_2x2() {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  return h / std::numbers::sqrt2;
}

inline Eigen::Matrix2cd phase_2x2(double phi) {
  Eigen::Matrix2cd r;
  r << 1, 0, 0, std::polar(1.0, phi);
  return r;
}

/// e^{-i theta} P(phi + pi/2) H P(2 theta) H.
inline Eigen::Matrix2cd rotation_2x2(double theta, double phi) {
  const auto h = hadamard_2x2();
  return std::polar(1.0, -theta) * phase_2x2(phi + std::numbers::pi / 2) * h * phase_2x2(2 * theta) * h;
}

/// |bits> with qubit 1 as the most significant bit.
inline Vector computational_state(int p, std::size_t index) {
  require(p >= 1 && p <= kMaxReferenceQubits, "reference simulator: p out of range");
  Vector v = Vector::Zero(Eigen::Index{1} << p);
  require(index < static_cast<std::size_t>(v.size()), "reference simulator: index out of range");
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return v;
}

inline void apply_single(Vector& v, int p, int qubit, const Eigen::Matrix2cd& u) {
  const Eigen::Index stride = Eigen::Index{1} << (p - qubit);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i & stride) continue;
    const cplx a0 = v(i);
    const cplx a1 = v(i | stride);
    v(i) = u(0, 0) * a0 + u(0, 1) * a1;
    v(i | stride) = u(1, 0) * a0 + u(1, 1) * a1;
  }
}

inline void apply_cnot(Vector& v, int p, int control, int target) {
  const Eigen::Index c = Eigen::Index{1} << (p - control);
  const Eigen::Index t = Eigen::Index{1} << (p - target);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if ((i & c) && !(i & t)) std::swap(v(i), v(i | t));
  }
}

inline Vector simulate(const Circuit& circuit, const Vector& initial) {
  circuit.validate();
  require(circuit.n <= kMaxReferenceQubits, "reference simulator: too many qubits");
  require(initial.size() == (Eigen::Index{1} << circuit.n), "reference simulator: dimension mismatch");
  Vector v = initial;
  for (const auto& g : circuit.gates) {
    switch (g.kind) {
      case GateKind::Hadamard: apply_single(v, circuit.n, g.qubit, hadamard_2x2()); break;
      case GateKind::Phase: apply_single(v, circuit.n, g.qubit, phase_2x2(g.angle1)); break;
      case GateKind::Composite: apply_single(v, circuit.n, g.qubit, rotation_2x2(g.angle1, g.angle2)); break;
      case GateKind::CNot: apply_cnot(v, circuit.n, g.qubit, g.target); break;
    }
  }
  return v;
}

/// Textbook Grover: H^p|0>, then `iterations` rounds of phase oracle and
/// diffusion H^p (2|0><0| - I) H^p. Returns the state after each round,
/// starting with the initial superposition.
inline std::vector<Vector> grover_sequence(int p, std::size_t target, int iterations) {
  Vector v = computational_state(p, 0);
  for (int q = 1; q <= p; ++q) apply_single(v, p, q, hadamard_2x2());
  std::vector<Vector> out{v};
  for (int t = 0; t < iterations; ++t) {
    v(static_cast<Eigen::Index>(target)) *= -1.0;
    for (int q = 1; q <= p; ++q) apply_single(v, p, q, hadamard_2x2());
    v = -v;  // 2|0><0| - I: negate everything except the |0> amplitude
    v(0) = -v(0);
    for (int q = 1; q <= p; ++q) apply_single(v, p, q, hadamard_2x2());
    out.push_back(v);
  }
  return out;
}

/// Dense (2|psi><psi| - I)(I - 2|k0><k0|), p <= 6.
inline DenseMatrix extraction_matrix(std::span<const cplx> psi, std::size_t target) {
  const auto dim = static_cast<Eigen::Index>(psi.size());
  require(dim <= 64, "extraction_matrix: dense oracle limited to p <= 6");
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v(i) = psi[static_cast<std::size_t>(i)];
  const DenseMatrix id = DenseMatrix::Identity(dim, dim);
  DenseMatrix reflect_target = id;
  reflect_target(static_cast<Eigen::Index>(target), static_cast<Eigen::Index>(target)) = -1.0;
  return (2.0 * v * v.adjoint() - id) * reflect_target;
}

}  // namespace spinor_gates::oracle
