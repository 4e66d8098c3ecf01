#pragma once

// Arithmetic and set expressions over any interpretation.
//
//   expr    := sum
//   sum     := product (('+' | '-') product)*
//   product := power ('*' power)*
//   power   := atom ('^' power)?             right associative
//   atom    := literal | '(' expr ')' | name '(' expr (',' expr)* ')'
//   literal := decimal | bij2 | hfs          formats as in textio.hpp
//
// Functions: s p double half exp2 powset augment ordinal (one argument),
// union inter diff (two arguments), subset in (two arguments, boolean).
// A boolean function may only appear at the top level.

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "polymath/axioms.hpp"
#include "polymath/errors.hpp"
#include "polymath/limits.hpp"
#include "polymath/textio.hpp"

namespace polymath {

struct Expr {
  enum class Kind { literal, binary, call };

  Kind kind = Kind::literal;
  std::size_t position = 0;
  // literal
  std::string text;
  TextFormat format = TextFormat::decimal;
  // binary: one of + - * ^
  char op = 0;
  // call
  std::string name;
  std::vector<Expr> args;

  bool is_boolean() const {
    return kind == Kind::call && (name == "subset" || name == "in");
  }
};

namespace detail {

struct FunctionInfo {
  std::string_view name;
  std::size_t arity;
};

inline constexpr FunctionInfo kFunctions[] = {
    {"s", 1},      {"p", 1},     {"double", 1}, {"half", 1},
    {"exp2", 1},   {"powset", 1}, {"augment", 1}, {"ordinal", 1},
    {"union", 2},  {"inter", 2}, {"diff", 2},   {"subset", 2},
    {"in", 2},
};

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = parse_sum();
    skip_blanks();
    if (pos_ < text_.size()) throw SyntaxError("unexpected input", pos_);
    return e;
  }

 private:
  static constexpr std::size_t kMaxDepth = 1000;

  void skip_blanks() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  char peek() {
    skip_blanks();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static void require_value(const Expr& e) {
    if (e.is_boolean()) {
      throw SyntaxError("boolean '" + e.name + "' used as a number", e.position);
    }
  }

  Expr binary(char op, Expr lhs, Expr rhs, std::size_t at) {
    require_value(lhs);
    require_value(rhs);
    Expr e;
    e.kind = Expr::Kind::binary;
    e.op = op;
    e.position = at;
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr parse_sum() {
    Expr lhs = parse_product();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      const std::size_t at = pos_++;
      lhs = binary(c, std::move(lhs), parse_product(), at);
    }
    return lhs;
  }

  Expr parse_product() {
    Expr lhs = parse_power();
    while (peek() == '*') {
      const std::size_t at = pos_++;
      lhs = binary('*', std::move(lhs), parse_power(), at);
    }
    return lhs;
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (peek() == '^') {
      const std::size_t at = pos_++;
      return binary('^', std::move(base), parse_power(), at);
    }
    return base;
  }

  Expr parse_atom() {
    if (++depth_ > kMaxDepth) throw SyntaxError("expression nested too deeply", pos_);
    Expr e = parse_atom_inner();
    --depth_;
    return e;
  }

  Expr parse_atom_inner() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      Expr inner = parse_sum();
      if (peek() != ')') throw SyntaxError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (c >= '0' && c <= '9') {
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
      return literal(start, TextFormat::decimal);
    }
    if (c == '[') return bracketed(start, '[', ']', TextFormat::bij2);
    if (c == '{') return bracketed(start, '{', '}', TextFormat::hfs);
    if (is_name_char(c)) return call(start);
    if (c == '\0') throw SyntaxError("unexpected end of expression", pos_);
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  Expr literal(std::size_t start, TextFormat format) {
    Expr e;
    e.kind = Expr::Kind::literal;
    e.position = start;
    e.format = format;
    e.text = std::string(text_.substr(start, pos_ - start));
    return e;
  }

  Expr bracketed(std::size_t start, char open, char close, TextFormat format) {
    std::size_t level = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_++];
      if (c == open) ++level;
      if (c == close && --level == 0) return literal(start, format);
    }
    throw SyntaxError(std::string("unterminated '") + open + "'", start);
  }

  static bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  }

  Expr call(std::size_t start) {
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    Expr e;
    e.kind = Expr::Kind::call;
    e.position = start;
    e.name = std::string(text_.substr(start, pos_ - start));
    const FunctionInfo* info = nullptr;
    for (const auto& f : kFunctions) {
      if (f.name == e.name) info = &f;
    }
    if (!info) throw SyntaxError("unknown function '" + e.name + "'", start);
    if (peek() != '(') throw SyntaxError("expected '(' after " + e.name, pos_);
    ++pos_;
    for (;;) {
      Expr arg = parse_sum();
      require_value(arg);
      e.args.push_back(std::move(arg));
      if (peek() != ',') break;
      ++pos_;
    }
    if (peek() != ')') throw SyntaxError("expected ')'", pos_);
    ++pos_;
    if (e.args.size() != info->arity) {
      throw SyntaxError(e.name + " takes " + std::to_string(info->arity) +
                            " argument(s), got " + std::to_string(e.args.size()),
                        start);
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

template <Polymath N>
N eval_value(const Expr& e, const Limits& limits) {
  switch (e.kind) {
    case Expr::Kind::literal:
      try {
        return parse_value<N>(e.text, e.format, limits);
      } catch (const SyntaxError& err) {
        throw SyntaxError(std::string("bad literal '") + e.text + "'",
                          e.position + err.position());
      }
    case Expr::Kind::binary: {
      const N x = eval_value<N>(e.args[0], limits);
      const N y = eval_value<N>(e.args[1], limits);
      switch (e.op) {
        case '+': return add(x, y);
        case '-':
          if (lt(x, y)) throw DomainError("subtract: result would be negative");
          return subtract(x, y);
        case '*': return multiply(x, y);
        default: return pow(x, y, limits);
      }
    }
    case Expr::Kind::call: {
      const N x = eval_value<N>(e.args[0], limits);
      if (e.name == "s") return succ(x);
      if (e.name == "p") return pred(x);
      if (e.name == "double") return twice(x);
      if (e.name == "half") return half(x);
      if (e.name == "exp2") return exp2(x, limits);
      if (e.name == "powset") return powerset(x, limits);
      if (e.name == "augment") return augment_set(x, limits);
      if (e.name == "ordinal") return nth_ordinal(x, limits);
      const N y = eval_value<N>(e.args[1], limits);
      if (e.name == "union") return set_union(x, y, limits);
      if (e.name == "inter") return set_intersection(x, y, limits);
      return set_difference(x, y, limits);
    }
  }
  throw SyntaxError("malformed expression", e.position);
}

}  // namespace detail

inline Expr parse_expr(std::string_view text) {
  return detail::ExprParser(text).parse();
}

template <Polymath N>
using EvalResult = std::variant<N, bool>;

template <Polymath N>
EvalResult<N> evaluate(const Expr& e, const Limits& limits = {}) {
  if (e.is_boolean()) {
    const N x = detail::eval_value<N>(e.args[0], limits);
    const N y = detail::eval_value<N>(e.args[1], limits);
    return e.name == "in" ? in_set(x, y, limits) : set_subset(x, y, limits);
  }
  return detail::eval_value<N>(e, limits);
}

template <Polymath N>
std::string render(const EvalResult<N>& r, TextFormat format, const Limits& limits = {}) {
  if (const bool* b = std::get_if<bool>(&r)) return *b ? "true" : "false";
  return print_value(std::get<N>(r), format, limits);
}

/// Parse, evaluate under N, print in `format`.
template <Polymath N>
std::string eval_to_text(std::string_view text, TextFormat format,
                         const Limits& limits = {}) {
  return render<N>(evaluate<N>(parse_expr(text), limits), format, limits);
}

}  // namespace polymath
