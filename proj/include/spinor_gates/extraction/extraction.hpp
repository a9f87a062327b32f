#pragma once

#include <bit>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "spinor_gates/extraction/reflections.hpp"
#include "spinor_gates/states/ladder.hpp"
#include "spinor_gates/states/state_ops.hpp"

namespace spinor_gates {

/// Decomposition of the initial state as A|k0_perp> + B|k0>, with
/// A = cos(theta) >= 0 and B = sin(theta) e^{i phi}.
struct ExtractionParams {
  int p = 0;
  std::size_t target = 0;
  Amplitudes psi;   // normalized initial state
  Amplitudes perp;  // normalized component orthogonal to |k0>; zero when A == 0
  double A = 0.0;
  cplx B{};
  double theta = 0.0;  // in [0, pi/2]
  double phi = 0.0;    // in (-pi, pi]
  bool extractable = false;

  std::size_t dimension() const { return psi.size(); }
};

/// Splits `alphas` (length 2^p) around the target index.
inline ExtractionParams analyze(std::span<const cplx> alphas, std::size_t target) {
  const std::size_t dim = alphas.size();
  require(dim >= 2 && std::has_single_bit(dim), "analyze: amplitude count must be 2^p with p >= 1");
  require(target < dim, "analyze: target index out of range");
  double total = 0.0;
  double rest = 0.0;
  for (std::size_t k = 0; k < dim; ++k) {
    total += std::norm(alphas[k]);
    if (k != target) rest += std::norm(alphas[k]);
  }
  require(total > 0.0, "analyze: all amplitudes are zero");

  ExtractionParams out;
  out.p = std::countr_zero(dim);
  out.target = target;
  const double scale = 1.0 / std::sqrt(total);
  out.psi.resize(dim);
  for (std::size_t k = 0; k < dim; ++k) out.psi[k] = alphas[k] * scale;

  out.A = std::sqrt(rest) * scale;
  out.B = out.psi[target];
  out.theta = std::atan2(std::abs(out.B), out.A);
  out.phi = std::arg(out.B);
  if (out.phi <= -std::numbers::pi) out.phi = std::numbers::pi;
  out.extractable = std::abs(out.B) > 0.0;

  out.perp.assign(dim, cplx{});
  if (rest > 0.0) {
    const double perp_scale = 1.0 / std::sqrt(rest);
    for (std::size_t k = 0; k < dim; ++k) {
      if (k != target) out.perp[k] = alphas[k] * perp_scale;
    }
  }
  return out;
}

/// Coefficients on (|k0_perp>, |k0>) after j applications of E.
inline std::pair<cplx, cplx> predict(int j, const ExtractionParams& params) {
  require(j >= 0, "predict: j must be non-negative");
  const double angle = (2.0 * j + 1.0) * params.theta;
  return {std::cos(angle), std::polar(std::sin(angle), params.phi)};
}

inline Amplitudes predicted_state(int j, const ExtractionParams& params) {
  const auto [c_perp, c_target] = predict(j, params);
  Amplitudes out(params.dimension());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = c_perp * params.perp[k];
  out[params.target] += c_target;
  return out;
}

struct IterationChoice {
  int j = 0;
  double epsilon = 0.0;  // (2j+1) theta - pi/2
};

/// Iteration count putting (2j+1) theta closest to pi/2; ties go to the
/// smaller j.
inline IterationChoice optimal_iterations(double theta) {
  if (!(theta > 0.0)) throw Unextractable("optimal_iterations: theta is zero, target absent");
  require(theta <= std::numbers::pi / 2 + 1e-15, "optimal_iterations: theta above pi/2");
  const double x = std::numbers::pi / (4.0 * theta) - 0.5;
  int j = static_cast<int>(std::ceil(x - 0.5));
  if (j < 0) j = 0;
  return {j, (2.0 * j + 1.0) * theta - std::numbers::pi / 2};
}

struct ExtractionReport {
  ExtractionParams params;
  int iterations = 0;
  double epsilon = 0.0;
  std::vector<cplx> trace;  // <k0| E^t psi>, t = 0..iterations
  double success_probability = 0.0;
  double max_deviation = 0.0;  // simulated vs closed form over all iterates
  Amplitudes final_state;
};

namespace detail {

inline void fill_choice(ExtractionReport& r, std::optional<int> iterations) {
  if (!r.params.extractable) throw Unextractable("target amplitude is zero; nothing to extract");
  const auto choice = optimal_iterations(r.params.theta);
  r.iterations = iterations.value_or(choice.j);
  require(r.iterations >= 0, "iterations must be non-negative");
  r.epsilon = (2.0 * r.iterations + 1.0) * r.params.theta - std::numbers::pi / 2;
}

}  // namespace detail

/// Iterates E on the amplitude vector and checks every iterate against the
/// closed form.
inline ExtractionReport run(std::span<const cplx> alphas, std::size_t target,
                            std::optional<int> iterations = std::nullopt) {
  ExtractionReport r;
  r.params = analyze(alphas, target);
  detail::fill_choice(r, iterations);
  const ExtractionOperator op(r.params.psi, target);
  Amplitudes cur = r.params.psi;
  for (int t = 0;; ++t) {
    r.trace.push_back(cur[target]);
    r.max_deviation = std::max(r.max_deviation, max_abs_diff(cur, predicted_state(t, r.params)));
    if (t == r.iterations) break;
    cur = op.apply(cur);
  }
  r.success_probability = std::norm(r.trace.back());
  r.final_state = std::move(cur);
  return r;
}

/// I - 2 prod_l [b_l]_l as an algebra element, with [+] for bit 0 and [-]
/// for bit 1. Acts as the target reflection in every sector.
inline AlgebraElement basis_reflection_element(std::uint32_t bits, int p) {
  Monomial m(p);
  for (int l = 1; l <= p; ++l) {
    const bool one = (bits >> (p - l)) & 1u;
    m.set_factor(l - 1, {Pair::P12, one ? FactorKind::ProjMinus : FactorKind::ProjPlus});
  }
  return AlgebraElement::identity(p) - AlgebraElement(m, 2.0);
}

/// Same algorithm on StateVectors confined to one sector: the target
/// reflection goes through the algebra (`apply`), the state reflection
/// through `inner`.
inline ExtractionReport run_on_states(std::span<const cplx> alphas, std::size_t target,
                                      Sector sector, std::optional<int> iterations = std::nullopt) {
  ExtractionReport r;
  r.params = analyze(alphas, target);
  detail::fill_choice(r, iterations);
  const int p = r.params.p;
  const std::size_t dim = r.params.dimension();

  StateVector psi(p, rep_of(sector));
  for (std::size_t k = 0; k < dim; ++k) psi.add(uniform_label(p, static_cast<std::uint32_t>(k), sector), r.params.psi[k]);
  const auto target_label = uniform_label(p, static_cast<std::uint32_t>(target), sector);
  const auto reflect_target = basis_reflection_element(static_cast<std::uint32_t>(target), p);

  auto to_amplitudes = [&](const StateVector& s) {
    Amplitudes a(dim);
    for (const auto& [lab, amp] : s.amplitudes()) {
      if (lab.sectors != target_label.sectors) throw std::logic_error("run_on_states: state left its sector");
      a[lab.bits] = amp;
    }
    return a;
  };

  StateVector cur = psi;
  for (int t = 0;; ++t) {
    r.trace.push_back(cur.amplitude(target_label));
    r.max_deviation = std::max(r.max_deviation, max_abs_diff(to_amplitudes(cur), predicted_state(t, r.params)));
    if (t == r.iterations) break;
    StateVector reflected = apply(reflect_target, cur);
    cur = (2.0 * inner(psi, reflected)) * psi - reflected;
  }
  r.success_probability = std::norm(r.trace.back());
  r.final_state = to_amplitudes(cur);
  return r;
}

/// Index of a bitstring with qubit 1 most significant.
inline std::size_t bitstring_index(std::string_view bits) {
  require(!bits.empty() && bits.size() <= static_cast<std::size_t>(kMaxQubits), "bitstring length out of range");
  std::size_t k = 0;
  for (const char c : bits) {
    require(c == '0' || c == '1', "bitstring must contain only 0 and 1");
    k = (k << 1) | static_cast<std::size_t>(c == '1');
  }
  return k;
}

inline Amplitudes uniform_amplitudes(int p) {
  require(p >= 1 && p <= kMaxQubits, "p out of range");
  const std::size_t dim = std::size_t{1} << p;
  return Amplitudes(dim, cplx{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
}

}  // namespace spinor_gates
