#pragma once

#include <cmath>
#include <map>

#include "spinor_gates/states/basis_label.hpp"

namespace spinor_gates {

/// Sparse amplitudes over basis labels of one representation. Labels are
/// orthonormal; an empty map is the zero state.
class StateVector {
 public:
  using AmplitudeMap = std::map<BasisLabel, cplx>;

  StateVector() = default;
  StateVector(int n, Rep rep) : n_(n), rep_(rep) {
    require(n >= 1 && n <= kMaxQubits, "qubit count out of range");
  }

  static StateVector zero(int n, Rep rep) { return {n, rep}; }

  int size() const { return n_; }
  Rep rep() const { return rep_; }
  bool is_zero() const { return amps_.empty(); }
  const AmplitudeMap& amplitudes() const { return amps_; }

  cplx amplitude(const BasisLabel& lab) const {
    auto it = amps_.find(lab);
    return it == amps_.end() ? cplx{} : it->second;
  }

  void add(const BasisLabel& lab, cplx c) {
    require(lab.n == n_ && lab.rep == rep_, "label does not match state shape");
    auto [it, inserted] = amps_.try_emplace(lab, c);
    if (!inserted) it->second += c;
    if (is_negligible(it->second)) amps_.erase(it);
  }

  double norm() const {
    double s = 0.0;
    for (const auto& [lab, a] : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  StateVector normalized() const {
    const double nrm = norm();
    require(nrm > 0.0, "cannot normalize the zero state");
    StateVector out = *this;
    for (auto& [lab, a] : out.amps_) a /= nrm;
    return out;
  }

  StateVector& operator+=(const StateVector& o) {
    check_shape(o);
    for (const auto& [lab, a] : o.amps_) add(lab, a);
    return *this;
  }
  StateVector& operator-=(const StateVector& o) {
    check_shape(o);
    for (const auto& [lab, a] : o.amps_) add(lab, -a);
    return *this;
  }
  StateVector& operator*=(cplx s) {
    for (auto& [lab, a] : amps_) a *= s;
    std::erase_if(amps_, [](const auto& kv) { return is_negligible(kv.second); });
    return *this;
  }

  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(cplx s, StateVector a) { return a *= s; }

  /// Largest amplitude difference; both states must share shape.
  double distance_max(const StateVector& o) const {
    check_shape(o);
    double mx = 0.0;
    for (const auto& [lab, a] : amps_) mx = std::max(mx, std::abs(a - o.amplitude(lab)));
    for (const auto& [lab, a] : o.amps_) {
      if (!amps_.contains(lab)) mx = std::max(mx, std::abs(a));
    }
    return mx;
  }

  void check_shape(const StateVector& o) const {
    require(n_ == o.n_, "state qubit count mismatch");
    require(rep_ == o.rep_, "state representation mismatch");
  }

 private:
  int n_ = 0;
  Rep rep_ = Rep::Chiral;
  AmplitudeMap amps_;
};

/// <a|b>, conjugate-linear in a.
inline cplx inner(const StateVector& a, const StateVector& b) {
  a.check_shape(b);
  cplx s{};
  const auto& small = a.amplitudes().size() <= b.amplitudes().size() ? a.amplitudes() : b.amplitudes();
  for (const auto& [lab, x] : small) s += std::conj(a.amplitude(lab)) * b.amplitude(lab);
  return s;
}

inline StateVector basis_state(const BasisLabel& lab) {
  StateVector s(lab.n, lab.rep);
  s.add(lab, 1.0);
  return s;
}

}  // namespace spinor_gates
