#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "spinor_gates/core/types.hpp"

namespace spinor_gates {

/// Shortest decimal form that parses back to the same double.
inline std::string format_exact(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

/// Fixed number of significant digits ("%.*g").
inline std::string format_sig(double x, int digits) {
  if (x == 0.0) x = 0.0;  // drop negative zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
  return buf;
}

/// Coefficient prefix for a term: "" for 1, "-" for -1, "0.5*", "-i*",
/// "(0.5+0.25i)*". With `standalone` the trailing '*' is omitted and unit
/// coefficients are spelled out.
inline std::string format_coefficient(cplx c, bool standalone) {
  const double re = c.real();
  const double im = c.imag();
  const std::string mul = standalone ? "" : "*";
  if (im == 0.0) {
    if (!standalone && re == 1.0) return "";
    if (!standalone && re == -1.0) return "-";
    return format_exact(re) + mul;
  }
  if (re == 0.0) {
    if (im == 1.0) return "i" + mul;
    if (im == -1.0) return "-i" + mul;
    return format_exact(im) + "i" + mul;
  }
  std::string out = "(" + format_exact(re);
  out += im < 0 ? "-" : "+";
  out += format_exact(std::abs(im)) + "i)";
  return out + mul;
}

}  // namespace spinor_gates
