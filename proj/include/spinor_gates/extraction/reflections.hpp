#pragma once

#include <cmath>
#include <concepts>
#include <span>
#include <vector>

#include "spinor_gates/core/types.hpp"

namespace spinor_gates {

using Amplitudes = std::vector<cplx>;

template <typename Op>
concept LinearOperator = requires(const Op& op, std::span<const cplx> v) {
  { op.dimension() } -> std::convertible_to<std::size_t>;
  { op.apply(v) } -> std::same_as<Amplitudes>;
  { op.apply_adjoint(v) } -> std::same_as<Amplitudes>;
};

inline cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
  require(a.size() == b.size(), "dot: dimension mismatch");
  cplx s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double norm2(std::span<const cplx> v) { return std::sqrt(std::real(dot(v, v))); }

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  require(a.size() == b.size(), "max_abs_diff: dimension mismatch");
  double mx = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) mx = std::max(mx, std::abs(a[i] - b[i]));
  return mx;
}

/// 2|psi><psi| - I, applied as a rank-one update.
class StateReflection {
 public:
  explicit StateReflection(Amplitudes psi) : psi_(std::move(psi)) {
    require(!psi_.empty(), "reflection: empty state");
    require(std::abs(norm2(psi_) - 1.0) <= kDefaultTolerance, "reflection: state is not normalized");
  }

  std::size_t dimension() const { return psi_.size(); }

  Amplitudes apply(std::span<const cplx> v) const {
    require(v.size() == psi_.size(), "reflection: dimension mismatch");
    const cplx overlap = 2.0 * dot(psi_, v);
    Amplitudes out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = overlap * psi_[i] - v[i];
    return out;
  }
  Amplitudes apply_adjoint(std::span<const cplx> v) const { return apply(v); }

 private:
  Amplitudes psi_;
};

/// I - 2|k0><k0|: flips the sign of one amplitude.
class BasisReflection {
 public:
  BasisReflection(std::size_t target, std::size_t dim) : target_(target), dim_(dim) {
    require(target < dim, "reflection: target index out of range");
  }

  std::size_t dimension() const { return dim_; }
  std::size_t target() const { return target_; }

  Amplitudes apply(std::span<const cplx> v) const {
    require(v.size() == dim_, "reflection: dimension mismatch");
    Amplitudes out(v.begin(), v.end());
    out[target_] = -out[target_];
    return out;
  }
  Amplitudes apply_adjoint(std::span<const cplx> v) const { return apply(v); }

 private:
  std::size_t target_;
  std::size_t dim_;
};

/// E = (2|psi><psi| - I)(I - 2|k0><k0|).
class ExtractionOperator {
 public:
  ExtractionOperator(Amplitudes psi, std::size_t target)
      : about_state_(std::move(psi)), about_target_(target, about_state_.dimension()) {}

  std::size_t dimension() const { return about_state_.dimension(); }

  Amplitudes apply(std::span<const cplx> v) const {
    return about_state_.apply(about_target_.apply(v));
  }
  Amplitudes apply_adjoint(std::span<const cplx> v) const {
    return about_target_.apply_adjoint(about_state_.apply_adjoint(v));
  }

 private:
  StateReflection about_state_;
  BasisReflection about_target_;
};

static_assert(LinearOperator<StateReflection>);
static_assert(LinearOperator<BasisReflection>);
static_assert(LinearOperator<ExtractionOperator>);

/// Applies `op` `times` times.
template <LinearOperator Op>
Amplitudes apply_power(const Op& op, std::span<const cplx> v, int times) {
  Amplitudes cur(v.begin(), v.end());
  for (int t = 0; t < times; ++t) cur = op.apply(cur);
  return cur;
}

}  // namespace spinor_gates
