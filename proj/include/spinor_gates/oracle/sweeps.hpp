#pragma once

// End-to-end checks of gates and extraction against the reference simulator.

#include <cmath>
#include <numbers>
#include <random>

#include "spinor_gates/extraction/extraction.hpp"
#include "spinor_gates/gates/circuit.hpp"
#include "spinor_gates/gates/gates.hpp"
#include "spinor_gates/oracle/reference_simulator.hpp"
#include "spinor_gates/oracle/verify.hpp"
#include "spinor_gates/states/state_ops.hpp"

namespace spinor_gates::oracle {

/// Dense amplitudes of a state living entirely in sector `s` on every qubit,
/// indexed by the bitstring with qubit 1 as the most significant bit. Any
/// amplitude outside that sector is returned through `leak` as its largest
/// magnitude.
inline Vector to_dense(const StateVector& state, Sector s, double& leak) {
  const int n = state.size();
  Vector v = Vector::Zero(Eigen::Index{1} << n);
  leak = 0.0;
  const BasisLabel pure = uniform_label(n, 0, s);
  for (const auto& [lab, a] : state.amplitudes()) {
    if (lab.rep != pure.rep || lab.sectors != pure.sectors) {
      leak = std::max(leak, std::abs(a));
      continue;
    }
    v(static_cast<Eigen::Index>(lab.bits)) = a;
  }
  return v;
}

inline double max_abs_diff(const Vector& a, const Vector& b) { return (a - b).cwiseAbs().maxCoeff(); }

/// Single gates and short circuits on every basis input, in chiral L, chiral
/// R and both parity sectors.
inline TableCheck check_gate_actions(double tol) {
  TableCheck c{.name = "gate_actions"};
  const double pi = std::numbers::pi;
  std::vector<Circuit> circuits;
  for (int n = 1; n <= 3; ++n) {
    for (int q = 1; q <= n; ++q) {
      circuits.push_back({n, {GateSpec::h(q)}});
      circuits.push_back({n, {GateSpec::phase(q, pi / 3)}});
      circuits.push_back({n, {GateSpec::rot(q, 0.7, -1.1)}});
      for (int m = 1; m <= n; ++m) {
        if (m != q) circuits.push_back({n, {GateSpec::cx(q, m)}});
      }
    }
  }
  circuits.push_back({2, {GateSpec::h(1), GateSpec::cx(1, 2)}});
  circuits.push_back({3, {GateSpec::h(1), GateSpec::cx(1, 2), GateSpec::cx(2, 3), GateSpec::phase(3, pi / 4),
                          GateSpec::rot(2, pi / 5, pi / 7), GateSpec::h(3)}});

  for (const auto& circ : circuits) {
    for (const Sector s : {Sector::Left, Sector::Right, Sector::ParityPlus, Sector::ParityMinus}) {
      for (std::uint32_t bits = 0; bits < (1u << circ.n); ++bits) {
        const StateVector out = apply_circuit(circ, basis_state(uniform_label(circ.n, bits, s)));
        double leak = 0.0;
        const Vector got = to_dense(out, s, leak);
        const Vector want = simulate(circ, computational_state(circ.n, bits));
        const double dev = std::max(leak, max_abs_diff(got, want));
        c.record(dev <= tol, dev, [&] {
          return "circuit with " + std::to_string(circ.gates.size()) + " gate(s) on n=" + std::to_string(circ.n) +
                 ", input bits " + std::to_string(bits) + ", sector " + sector_char(s);
        });
      }
    }
  }
  return c;
}

/// Iterated extraction on seeded random inputs against powers of the dense
/// extraction matrix.
inline TableCheck check_extraction(double tol, int instances = 20) {
  TableCheck c{.name = "extraction"};
  std::mt19937_64 rng(20240917);
  std::normal_distribution<double> gauss;
  for (int inst = 0; inst < instances; ++inst) {
    const int p = 1 + inst % 5;
    const std::size_t dim = std::size_t{1} << p;
    Amplitudes alphas(dim);
    for (auto& a : alphas) a = {gauss(rng), gauss(rng)};
    const std::size_t target = rng() % dim;
    const auto report = run(alphas, target);
    const DenseMatrix e = extraction_matrix(report.params.psi, target);
    Vector v(static_cast<Eigen::Index>(dim));
    for (std::size_t k = 0; k < dim; ++k) v(static_cast<Eigen::Index>(k)) = report.params.psi[k];
    double dev = 0.0;
    for (int t = 0; t < report.iterations; ++t) v = e * v;
    for (std::size_t k = 0; k < dim; ++k) {
      dev = std::max(dev, std::abs(v(static_cast<Eigen::Index>(k)) - report.final_state[k]));
    }
    c.record(dev <= tol, dev, [&] { return "instance " + std::to_string(inst) + ", p=" + std::to_string(p); });
  }
  return c;
}

/// Table checks plus the gate and extraction sweeps.
inline VerifyReport verify_all(double tol = kDefaultTolerance) {
  VerifyReport r = verify_tables(tol);
  r.checks.push_back(check_gate_actions(tol));
  r.checks.push_back(check_extraction(tol));
  return r;
}

}  // namespace spinor_gates::oracle
