#pragma once

// Operator expressions in nilpotent/projector notation.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (['*'] unary)*          juxtaposition multiplies
//   unary   := ('+' | '-') unary | postfix
//   postfix := primary "'"*                  ' is the hermitian conjugate
//   primary := number | number 'i' | 'i' | 'I'
//            | factor '@' q | builtin '@' q | '(' expr ')'
//
// factors: (+i) (-i) [+i] [-i] (+) (-) [+] [-]
// builtins: g0 g1 g2 g3, tauL+ tauL- tauR+ tauR- tau+ tau-, S03 S12 Gamma
// Qubits are 1-based. A '(' that does not start a factor followed by '@'
// opens a group, so "(+i)" alone is the scalar i.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinor_gates/core/element.hpp"
#include "spinor_gates/core/generators.hpp"
#include "spinor_gates/frontend/parse_error.hpp"
#include "spinor_gates/states/ladder.hpp"

namespace spinor_gates {

enum class Builtin { Gamma0, Gamma1, Gamma2, Gamma3, TauLPlus, TauLMinus, TauRPlus, TauRMinus, TauPlus, TauMinus, S03, S12, Handedness };

/// Parsed expression tree.
struct ExpressionAst {
  enum class Kind { Scalar, Identity, Factor, Builtin, Negate, Add, Subtract, Multiply, Dagger };

  Kind kind = Kind::Scalar;
  cplx scalar{};
  FactorCode factor{};
  Builtin builtin = Builtin::Gamma0;
  int qubit = 0;
  std::vector<ExpressionAst> children;

  /// Largest qubit index referenced, 0 if none.
  int max_qubit() const {
    int q = qubit;
    for (const auto& c : children) q = std::max(q, c.max_qubit());
    return q;
  }
};

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  ExpressionAst parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    auto e = parse_sum();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + peek() + "'");
    return e;
  }

 private:
  struct Mark {
    std::size_t pos;
    int line;
    int column;
  };

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t off = 0) const { return pos_ + off < text_.size() ? text_[pos_ + off] : '\0'; }
  Mark mark() const { return {pos_, line_, column_}; }
  void reset(const Mark& m) {
    pos_ = m.pos;
    line_ = m.line;
    column_ = m.column;
  }

  void advance(std::size_t count = 1) {
    for (std::size_t k = 0; k < count && !at_end(); ++k) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
      ++pos_;
    }
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column_); }
  [[noreturn]] static void fail_at(const Mark& m, const std::string& msg) { throw ParseError(msg, m.line, m.column); }

  static ExpressionAst node(ExpressionAst::Kind k, std::vector<ExpressionAst> children = {}) {
    ExpressionAst n;
    n.kind = k;
    n.children = std::move(children);
    return n;
  }

  ExpressionAst parse_sum() {
    auto lhs = parse_product();
    for (;;) {
      skip_space();
      const char c = peek();
      if (c != '+' && c != '-') return lhs;
      advance();
      auto rhs = parse_product();
      lhs = node(c == '+' ? ExpressionAst::Kind::Add : ExpressionAst::Kind::Subtract,
                 {std::move(lhs), std::move(rhs)});
    }
  }

  bool starts_operand() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == '[' ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  ExpressionAst parse_product() {
    auto lhs = parse_unary();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        advance();
      } else if (!starts_operand()) {
        return lhs;
      }
      auto rhs = parse_unary();
      lhs = node(ExpressionAst::Kind::Multiply, {std::move(lhs), std::move(rhs)});
    }
  }

  ExpressionAst parse_unary() {
    skip_space();
    if (peek() == '-') {
      advance();
      return node(ExpressionAst::Kind::Negate, {parse_unary()});
    }
    if (peek() == '+') {
      advance();
      return parse_unary();
    }
    auto e = parse_primary();
    for (;;) {
      skip_space();
      if (peek() != '\'') return e;
      advance();
      e = node(ExpressionAst::Kind::Dagger, {std::move(e)});
    }
  }

  int parse_qubit_suffix(const Mark& symbol_start) {
    if (peek() != '@') fail_at(symbol_start, "missing @<qubit> after operator symbol");
    advance();
    const Mark digits = mark();
    std::size_t len = 0;
    while (std::isdigit(static_cast<unsigned char>(peek(len)))) ++len;
    if (len == 0) fail("expected qubit index after '@'");
    int q = 0;
    const auto sv = text_.substr(pos_, len);
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), q);
    if (res.ec != std::errc{}) fail_at(digits, "qubit index out of range");
    if (q == 0) fail_at(digits, "qubit index 0: qubits are numbered from 1");
    if (q > kMaxQubits) fail_at(digits, "qubit index exceeds " + std::to_string(kMaxQubits));
    advance(len);
    return q;
  }

  std::optional<FactorCode> match_factor_symbol(std::size_t& len) const {
    static constexpr std::pair<std::string_view, FactorCode> table[] = {
        {"(+i)", {Pair::P03, FactorKind::NilPlus}},  {"(-i)", {Pair::P03, FactorKind::NilMinus}},
        {"[+i]", {Pair::P03, FactorKind::ProjPlus}}, {"[-i]", {Pair::P03, FactorKind::ProjMinus}},
        {"(+)", {Pair::P12, FactorKind::NilPlus}},   {"(-)", {Pair::P12, FactorKind::NilMinus}},
        {"[+]", {Pair::P12, FactorKind::ProjPlus}},  {"[-]", {Pair::P12, FactorKind::ProjMinus}},
    };
    const auto rest = text_.substr(pos_);
    for (const auto& [sym, code] : table) {
      if (rest.starts_with(sym)) {
        len = sym.size();
        return code;
      }
    }
    return std::nullopt;
  }

  ExpressionAst parse_number() {
    const Mark start = mark();
    std::size_t len = 0;
    while (std::isdigit(static_cast<unsigned char>(peek(len))) || peek(len) == '.') ++len;
    if ((peek(len) == 'e' || peek(len) == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek(len + 1))) ||
         ((peek(len + 1) == '+' || peek(len + 1) == '-') && std::isdigit(static_cast<unsigned char>(peek(len + 2)))))) {
      len += 2;
      while (std::isdigit(static_cast<unsigned char>(peek(len)))) ++len;
    }
    double value = 0.0;
    const auto sv = text_.substr(pos_, len);
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (res.ec != std::errc{} || res.ptr != sv.data() + sv.size()) fail_at(start, "malformed number");
    advance(len);
    ExpressionAst n = node(ExpressionAst::Kind::Scalar);
    if (peek() == 'i' && !std::isalnum(static_cast<unsigned char>(peek(1)))) {
      advance();
      n.scalar = {0.0, value};
    } else {
      n.scalar = {value, 0.0};
    }
    return n;
  }

  ExpressionAst parse_word() {
    const Mark start = mark();
    std::size_t len = 0;
    while (std::isalnum(static_cast<unsigned char>(peek(len)))) ++len;
    std::string word(text_.substr(pos_, len));
    if ((word == "tau" || word == "tauL" || word == "tauR") && (peek(len) == '+' || peek(len) == '-')) {
      word += peek(len);
      ++len;
    }
    advance(len);
    if (word == "i") {
      ExpressionAst n = node(ExpressionAst::Kind::Scalar);
      n.scalar = kI;
      return n;
    }
    if (word == "I") return node(ExpressionAst::Kind::Identity);
    static constexpr std::pair<std::string_view, Builtin> builtins[] = {
        {"g0", Builtin::Gamma0},      {"g1", Builtin::Gamma1},       {"g2", Builtin::Gamma2},
        {"g3", Builtin::Gamma3},      {"tauL+", Builtin::TauLPlus},  {"tauL-", Builtin::TauLMinus},
        {"tauR+", Builtin::TauRPlus}, {"tauR-", Builtin::TauRMinus}, {"tau+", Builtin::TauPlus},
        {"tau-", Builtin::TauMinus},  {"S03", Builtin::S03},         {"S12", Builtin::S12},
        {"Gamma", Builtin::Handedness},
    };
    for (const auto& [name, b] : builtins) {
      if (word == name) {
        ExpressionAst n = node(ExpressionAst::Kind::Builtin);
        n.builtin = b;
        n.qubit = parse_qubit_suffix(start);
        return n;
      }
    }
    fail_at(start, "unknown symbol '" + word + "'");
  }

  ExpressionAst parse_primary() {
    skip_space();
    const Mark start = mark();
    const char c = peek();
    if (at_end()) fail("unexpected end of expression");
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_word();
    if (c == '(' || c == '[') {
      std::size_t len = 0;
      if (const auto code = match_factor_symbol(len)) {
        if (peek(len) == '@' || c == '[') {
          advance(len);
          ExpressionAst n = node(ExpressionAst::Kind::Factor);
          n.factor = *code;
          n.qubit = parse_qubit_suffix(start);
          return n;
        }
      }
      if (c == '[') fail_at(start, "unknown projector symbol");
      advance();
      auto inner = parse_sum();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      advance();
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

inline AlgebraElement builtin_element(Builtin b, int q, int n) {
  switch (b) {
    case Builtin::Gamma0: return gamma_as_element(0, q, n);
    case Builtin::Gamma1: return gamma_as_element(1, q, n);
    case Builtin::Gamma2: return gamma_as_element(2, q, n);
    case Builtin::Gamma3: return gamma_as_element(3, q, n);
    case Builtin::TauLPlus: return tau_operator(TauKind::LPlus, q, n);
    case Builtin::TauLMinus: return tau_operator(TauKind::LMinus, q, n);
    case Builtin::TauRPlus: return tau_operator(TauKind::RPlus, q, n);
    case Builtin::TauRMinus: return tau_operator(TauKind::RMinus, q, n);
    case Builtin::TauPlus: return tau_operator(TauKind::Plus, q, n);
    case Builtin::TauMinus: return tau_operator(TauKind::Minus, q, n);
    case Builtin::S03: return cartan_generator(Pair::P03, q, n);
    case Builtin::S12: return cartan_generator(Pair::P12, q, n);
    case Builtin::Handedness: return handedness_operator(q, n);
  }
  return AlgebraElement::zero(n);
}

}  // namespace detail

inline ExpressionAst parse_expression_ast(std::string_view text) {
  return detail::ExpressionParser(text).parse();
}

/// Evaluates the tree over n qubits.
inline AlgebraElement evaluate(const ExpressionAst& e, int n) {
  using K = ExpressionAst::Kind;
  switch (e.kind) {
    case K::Scalar: return AlgebraElement::scalar(n, e.scalar);
    case K::Identity: return AlgebraElement::identity(n);
    case K::Factor: return factor_element(e.factor, e.qubit, n);
    case K::Builtin: return detail::builtin_element(e.builtin, e.qubit, n);
    case K::Negate: return -evaluate(e.children[0], n);
    case K::Dagger: return evaluate(e.children[0], n).dagger();
    case K::Add: return evaluate(e.children[0], n) + evaluate(e.children[1], n);
    case K::Subtract: return evaluate(e.children[0], n) - evaluate(e.children[1], n);
    case K::Multiply: return evaluate(e.children[0], n) * evaluate(e.children[1], n);
  }
  return AlgebraElement::zero(n);
}

/// Parses and evaluates. Without `qubits` the count is the largest index
/// used (at least 1).
inline AlgebraElement parse_expression(std::string_view text, std::optional<int> qubits = std::nullopt) {
  const auto ast = parse_expression_ast(text);
  const int used = ast.max_qubit();
  int n = std::max(1, used);
  if (qubits) {
    require(*qubits >= 1 && *qubits <= kMaxQubits, "qubit count out of range");
    require(*qubits >= used, "expression uses qubit " + std::to_string(used) + " but only " +
                                 std::to_string(*qubits) + " declared");
    n = *qubits;
  }
  return evaluate(ast, n);
}

}  // namespace spinor_gates
