#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace spinor_gates {

using cplx = std::complex<double>;

/// Coefficients and amplitudes with magnitude below this are dropped.
inline constexpr double kZeroThreshold = 1e-12;

/// Default tolerance for numeric comparisons against the oracles.
inline constexpr double kDefaultTolerance = 1e-12;

/// Packed monomials hold 10 qubits per 64-bit word.
inline constexpr int kMaxQubits = 20;

inline constexpr cplx kI{0.0, 1.0};

/// Raised when a caller breaks an operation's precondition (size mismatch,
/// mixed Cartan pairs, control equal to target, ...).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by extraction when the target amplitude vanishes.
class Unextractable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ContractViolation(message);
}

inline bool is_negligible(const cplx& c, double tol = kZeroThreshold) {
  return std::abs(c) < tol;
}

}  // namespace spinor_gates
