#pragma once

#include <bit>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "spinor_gates/core/generators.hpp"
#include "spinor_gates/gates/gate_spec.hpp"
#include "spinor_gates/states/ladder.hpp"
#include "spinor_gates/states/state_ops.hpp"

namespace spinor_gates {

namespace detail {

inline AlgebraElement ensure_even(AlgebraElement g, const char* name) {
  if (!g.is_even_per_qubit()) throw std::logic_error(std::string(name) + ": odd term in gate element");
  return g;
}

inline AlgebraElement pair_term(FactorKind f03, FactorKind f12, int l, int n, cplx c) {
  return AlgebraElement(pair_monomial(f03, f12, l, n), c);
}

}  // namespace detail

/// R_phi = [+]_l + e^{i phi} [-]_l.
inline AlgebraElement phase_gate(int l, double phi, int n) {
  auto g = projector12(true, l, n);
  g += std::polar(1.0, phi) * projector12(false, l, n);
  return detail::ensure_even(std::move(g), "phase_gate");
}

/// H_l = (1/sqrt2)[ [+] - [-] - (+i)(-) + (-i)(-) - (-i)(+) + (+i)(+) ].
inline AlgebraElement hadamard(int l, int n) {
  using K = FactorKind;
  const double h = 1.0 / std::numbers::sqrt2;
  auto g = projector12(true, l, n) - projector12(false, l, n);
  g += detail::pair_term(K::NilPlus, K::NilMinus, l, n, -1.0);
  g += detail::pair_term(K::NilMinus, K::NilMinus, l, n, 1.0);
  g += detail::pair_term(K::NilMinus, K::NilPlus, l, n, -1.0);
  g += detail::pair_term(K::NilPlus, K::NilPlus, l, n, 1.0);
  return detail::ensure_even(h * g, "hadamard");
}

/// H_l = (1/sqrt2)[ [+] - [-] + tau- + tau+ ].
inline AlgebraElement hadamard_from_ladder(int l, int n) {
  auto g = projector12(true, l, n) - projector12(false, l, n);
  g += tau_operator(TauKind::Minus, l, n) + tau_operator(TauKind::Plus, l, n);
  return (1.0 / std::numbers::sqrt2) * g;
}

/// C_lm = [+]_l + [-]_l [ -(+i)(-) + (-i)(-) - (-i)(+) + (+i)(+) ]_m,
/// control l, target m.
inline AlgebraElement cnot(int control, int target, int n) {
  using K = FactorKind;
  require_qubit(control, n);
  require_qubit(target, n);
  require(control != target, "cnot: control and target must differ");
  auto flip = detail::pair_term(K::NilPlus, K::NilMinus, target, n, -1.0);
  flip += detail::pair_term(K::NilMinus, K::NilMinus, target, n, 1.0);
  flip += detail::pair_term(K::NilMinus, K::NilPlus, target, n, -1.0);
  flip += detail::pair_term(K::NilPlus, K::NilPlus, target, n, 1.0);
  auto g = projector12(true, control, n) + projector12(false, control, n) * flip;
  return detail::ensure_even(std::move(g), "cnot");
}

/// C_lm = [+]_l + [-]_l (tau-_m + tau+_m).
inline AlgebraElement cnot_from_ladder(int control, int target, int n) {
  require(control != target, "cnot: control and target must differ");
  return projector12(true, control, n) +
         projector12(false, control, n) *
             (tau_operator(TauKind::Minus, target, n) + tau_operator(TauKind::Plus, target, n));
}

/// e^{-i theta} R_{phi + pi/2} H R_{2 theta} H on qubit l; maps |0> to
/// cos(theta)|0> + e^{i phi} sin(theta)|1>. On |1> the same element gives
/// -i (sin(theta)|0> - e^{i phi} cos(theta)|1>).
inline AlgebraElement composite_rotation(int l, double theta, double phi, int n) {
  const auto h = hadamard(l, n);
  auto g = phase_gate(l, phi + std::numbers::pi / 2, n) * h * phase_gate(l, 2 * theta, n) * h;
  return detail::ensure_even(std::polar(1.0, -theta) * g, "composite_rotation");
}

/// prod_i H_i applied to |0...0> in the given sector.
inline StateVector uniform_superposition(int n, Sector sector = Sector::ParityPlus) {
  require(n >= 1, "uniform_superposition: n >= 1 required");
  StateVector s = all_zeros(n, sector);
  for (int l = 1; l <= n; ++l) s = apply(hadamard(l, n), s);
  return s;
}

/// Gate elements built on first use and kept per (kind, qubits, angles, n).
/// Lookups and inserts are serialised; returned references stay valid.
class GateCache {
 public:
  const AlgebraElement& get(const GateSpec& g, int n) {
    const Key key{static_cast<int>(g.kind), g.qubit, g.target, n,
                  std::bit_cast<std::uint64_t>(g.angle1), std::bit_cast<std::uint64_t>(g.angle2)};
    std::lock_guard lock(mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, build(g, n)).first;
    return it->second;
  }

  static AlgebraElement build(const GateSpec& g, int n) {
    switch (g.kind) {
      case GateKind::Phase: return phase_gate(g.qubit, g.angle1, n);
      case GateKind::Hadamard: return hadamard(g.qubit, n);
      case GateKind::CNot: return cnot(g.qubit, g.target, n);
      case GateKind::Composite: return composite_rotation(g.qubit, g.angle1, g.angle2, n);
    }
    throw std::logic_error("unknown gate kind");
  }

 private:
  using Key = std::tuple<int, int, int, int, std::uint64_t, std::uint64_t>;
  std::mutex mutex_;
  std::map<Key, AlgebraElement> cache_;
};

inline GateCache& gate_cache() {
  static GateCache cache;
  return cache;
}

}  // namespace spinor_gates
