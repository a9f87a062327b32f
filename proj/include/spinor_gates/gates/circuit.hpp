#pragma once

#include "spinor_gates/gates/gates.hpp"

namespace spinor_gates {

/// Applies the gates left to right.
inline StateVector apply_circuit(const Circuit& c, const StateVector& s) {
  require(c.n == s.size(), "apply_circuit: qubit count mismatch");
  c.validate();
  StateVector cur = s;
  for (const auto& g : c.gates) cur = apply(gate_cache().get(g, c.n), cur);
  return cur;
}

}  // namespace spinor_gates
