#pragma once

// Line-oriented circuit files:
//
//   # comment
//   H <q>
//   PHASE <q> <radians>
//   CNOT <control> <target>
//   ROT <q> <theta> <phi>
//
// Qubits are 1-based. Angles are decimal numbers or simple multiples of pi
// such as "pi/4", "-pi", "3*pi/8", "0.5*pi".

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spinor_gates/frontend/parse_error.hpp"
#include "spinor_gates/gates/gate_spec.hpp"

namespace spinor_gates {

namespace detail {

struct Word {
  std::string_view text;
  int column;
};

inline std::vector<Word> split_words(std::string_view line) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

inline bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

}  // namespace detail

/// "1.25", "pi", "-pi/4", "3*pi/8", "0.5*pi".
inline std::optional<double> parse_angle(std::string_view s) {
  double value = 0.0;
  if (detail::parse_double(s, value)) return value;
  double sign = 1.0;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    sign = s.front() == '-' ? -1.0 : 1.0;
    s.remove_prefix(1);
  }
  const auto pi_at = s.find("pi");
  if (pi_at == std::string_view::npos) return std::nullopt;
  double factor = 1.0;
  if (pi_at > 0) {
    const auto head = s.substr(0, pi_at);
    if (head.back() != '*' || !detail::parse_double(head.substr(0, head.size() - 1), factor)) return std::nullopt;
  }
  double divisor = 1.0;
  const auto tail = s.substr(pi_at + 2);
  if (!tail.empty()) {
    if (tail.front() != '/' || !detail::parse_double(tail.substr(1), divisor) || divisor == 0.0) return std::nullopt;
  }
  return sign * factor * std::numbers::pi / divisor;
}

/// Parses circuit text. The circuit's qubit count is the largest index used,
/// raised to `min_qubits` when given.
inline Circuit parse_circuit(std::string_view text, int min_qubits = 0) {
  Circuit c;
  c.n = min_qubits;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto words = detail::split_words(line);
    if (words.empty()) {
      if (eol == text.size()) break;
      continue;
    }

    auto qubit = [&](const detail::Word& w) {
      int q = 0;
      const auto res = std::from_chars(w.text.data(), w.text.data() + w.text.size(), q);
      if (res.ec != std::errc{} || res.ptr != w.text.data() + w.text.size())
        throw ParseError("expected qubit index, got '" + std::string(w.text) + "'", line_no, w.column);
      if (q < 1) throw ParseError("qubit index must be >= 1", line_no, w.column);
      if (q > kMaxQubits) throw ParseError("qubit index exceeds " + std::to_string(kMaxQubits), line_no, w.column);
      c.n = std::max(c.n, q);
      return q;
    };
    auto angle = [&](const detail::Word& w) {
      const auto a = parse_angle(w.text);
      if (!a) throw ParseError("expected angle, got '" + std::string(w.text) + "'", line_no, w.column);
      return *a;
    };
    auto arity = [&](std::size_t expected) {
      if (words.size() != expected + 1)
        throw ParseError(std::string(words[0].text) + " takes " + std::to_string(expected) + " argument(s)", line_no,
                         words[0].column);
    };

    std::string op(words[0].text);
    std::transform(op.begin(), op.end(), op.begin(), [](unsigned char ch) { return std::toupper(ch); });
    if (op == "H") {
      arity(1);
      c.gates.push_back(GateSpec::h(qubit(words[1])));
    } else if (op == "PHASE") {
      arity(2);
      c.gates.push_back(GateSpec::phase(qubit(words[1]), angle(words[2])));
    } else if (op == "CNOT") {
      arity(2);
      const int control = qubit(words[1]);
      const int target = qubit(words[2]);
      if (control == target) throw ParseError("CNOT control and target must differ", line_no, words[2].column);
      c.gates.push_back(GateSpec::cx(control, target));
    } else if (op == "ROT") {
      arity(3);
      c.gates.push_back(GateSpec::rot(qubit(words[1]), angle(words[2]), angle(words[3])));
    } else {
      throw ParseError("unknown gate '" + std::string(words[0].text) + "'", line_no, words[0].column);
    }
    if (eol == text.size()) break;
  }
  if (c.n < 1) c.n = 1;
  return c;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace spinor_gates
