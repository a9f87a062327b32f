#pragma once

#include <algorithm>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "spinor_gates/core/format.hpp"
#include "spinor_gates/extraction/extraction.hpp"
#include "spinor_gates/oracle/verify.hpp"
#include "spinor_gates/states/state_vector.hpp"

namespace spinor_gates {

inline nlohmann::json complex_json(cplx c) { return nlohmann::json::array({c.real(), c.imag()}); }

inline const char* rep_name(Rep r) { return r == Rep::Chiral ? "chiral" : "parity"; }

/// One record per label in label order; amplitudes below the zero threshold
/// are omitted.
inline nlohmann::json state_to_json(const StateVector& s) {
  nlohmann::json amps = nlohmann::json::array();
  for (const auto& [lab, a] : s.amplitudes()) {
    if (is_negligible(a)) continue;
    amps.push_back({{"bitstring", lab.bitstring()}, {"sector", lab.sector_string()}, {"re", a.real()}, {"im", a.imag()}});
  }
  return {{"n", s.size()}, {"rep", rep_name(s.rep())}, {"amplitudes", amps}};
}

/// "bitstring,sector,real,imag" rows.
inline std::string state_to_csv(const StateVector& s, int digits = 17) {
  std::string out = "bitstring,sector,real,imag\n";
  for (const auto& [lab, a] : s.amplitudes()) {
    if (is_negligible(a)) continue;
    out += lab.bitstring() + "," + lab.sector_string() + "," + format_sig(a.real(), digits) + "," +
           format_sig(a.imag(), digits) + "\n";
  }
  return out;
}

/// Aligned columns with 8 significant digits.
inline std::string state_to_table(const StateVector& s) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-*s  %-*s  %16s  %16s\n", std::max(9, s.size()), "bitstring",
                std::max(6, s.size()), "sector", "real", "imag");
  out += buf;
  for (const auto& [lab, a] : s.amplitudes()) {
    if (is_negligible(a)) continue;
    std::snprintf(buf, sizeof(buf), "%-*s  %-*s  %16s  %16s\n", std::max(9, s.size()), lab.bitstring().c_str(),
                  std::max(6, s.size()), lab.sector_string().c_str(), format_sig(a.real(), 8).c_str(),
                  format_sig(a.imag(), 8).c_str());
    out += buf;
  }
  return out;
}

inline nlohmann::json report_to_json(const ExtractionReport& r, const std::string& target) {
  const auto& pr = r.params;
  nlohmann::json trace = nlohmann::json::array();
  for (std::size_t t = 0; t < r.trace.size(); ++t) {
    trace.push_back({{"iteration", t}, {"overlap", complex_json(r.trace[t])}, {"probability", std::norm(r.trace[t])}});
  }
  return {{"p", pr.p},
          {"target", target},
          {"target_index", pr.target},
          {"A", pr.A},
          {"B", complex_json(pr.B)},
          {"theta", pr.theta},
          {"phi", pr.phi},
          {"extractable", pr.extractable},
          {"iterations", r.iterations},
          {"optimal_iterations", optimal_iterations(pr.theta).j},
          {"epsilon", r.epsilon},
          {"success_probability", r.success_probability},
          {"max_deviation", r.max_deviation},
          {"trace", trace}};
}

/// "iteration,probability" rows.
inline std::string trace_to_csv(const ExtractionReport& r) {
  std::string out = "iteration,probability\n";
  for (std::size_t t = 0; t < r.trace.size(); ++t) {
    out += std::to_string(t) + "," + format_sig(std::norm(r.trace[t]), 17) + "\n";
  }
  return out;
}

inline nlohmann::json verify_to_json(const oracle::VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"failed", c.failed},
                      {"max_abs_deviation", c.max_deviation},
                      {"mismatches", c.mismatches}});
  }
  return {{"tolerance", r.tolerance}, {"ok", r.ok()}, {"failed", r.total_failed()}, {"checks", checks}};
}

}  // namespace spinor_gates
