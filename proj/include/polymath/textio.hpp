#pragma once

// Text formats:
//
//   decimal  [0-9]+
//   bij2     '[' (bit (',' bit)*)? ']'   bijective digits, least significant first
//   hfs      set := '{' (set (',' set)*)? '}'
//
// Printers emit no whitespace. Parsers skip ASCII whitespace between tokens,
// and parse_hfs accepts children in any order.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "polymath/axioms.hpp"
#include "polymath/bignat.hpp"
#include "polymath/bitstack.hpp"
#include "polymath/errors.hpp"
#include "polymath/hfs.hpp"
#include "polymath/limits.hpp"
#include "polymath/peano.hpp"

namespace polymath {

enum class ReprTag { peano, bitstack, hfs, bignat };
enum class TextFormat { decimal, bij2, hfs };

inline std::optional<ReprTag> parse_repr_tag(std::string_view s) {
  if (s == "peano") return ReprTag::peano;
  if (s == "bitstack") return ReprTag::bitstack;
  if (s == "hfs") return ReprTag::hfs;
  if (s == "bignat") return ReprTag::bignat;
  return std::nullopt;
}

inline std::string_view to_string(ReprTag t) {
  switch (t) {
    case ReprTag::peano: return "peano";
    case ReprTag::bitstack: return "bitstack";
    case ReprTag::hfs: return "hfs";
    case ReprTag::bignat: return "bignat";
  }
  return "?";
}

inline std::optional<TextFormat> parse_text_format(std::string_view s) {
  if (s == "decimal") return TextFormat::decimal;
  if (s == "bij2") return TextFormat::bij2;
  if (s == "hfs") return TextFormat::hfs;
  return std::nullopt;
}

/// Guessed from the first non-blank character.
inline std::optional<TextFormat> sniff_text_format(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == '{') return TextFormat::hfs;
    if (c == '[') return TextFormat::bij2;
    if (c >= '0' && c <= '9') return TextFormat::decimal;
    return std::nullopt;
  }
  return std::nullopt;
}

namespace detail {

inline constexpr std::size_t kDefaultMaxDepth = 10000;

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_blanks() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t position() const { return pos_; }
  void advance() { ++pos_; }

  void expect(char c) {
    if (peek() != c) {
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  void expect_end() {
    skip_blanks();
    if (!at_end()) throw SyntaxError("unexpected trailing input", pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline Hfs parse_set(Cursor& in, std::size_t depth, std::size_t max_depth) {
  if (depth > max_depth) {
    throw SyntaxError("nesting deeper than " + std::to_string(max_depth),
                      in.position());
  }
  in.skip_blanks();
  const std::size_t open_at = in.position();
  in.expect('{');
  std::vector<Hfs> children;
  in.skip_blanks();
  if (in.peek() != '}') {
    for (;;) {
      children.push_back(parse_set(in, depth + 1, max_depth));
      in.skip_blanks();
      if (in.peek() != ',') break;
      in.advance();
    }
  }
  in.skip_blanks();
  in.expect('}');
  std::sort(children.begin(), children.end(), [](const Hfs& a, const Hfs& b) {
    return Hfs::structural_compare(a, b) == Ordering3::lt;
  });
  for (std::size_t k = 1; k < children.size(); ++k) {
    if (children[k - 1] == children[k]) {
      throw DuplicateElementError("duplicate element in set opened at offset " +
                                  std::to_string(open_at));
    }
  }
  return Hfs::from_canonical_children(std::move(children));
}

template <Polymath N>
void check_materializable(const BigNat& value, const Limits& limits) {
  if constexpr (std::is_same_v<N, Peano>) {
    const auto w = value.to_word();
    if (!w || *w > limits.max_unary) {
      throw ResourceLimitError("value exceeds unary guard of " +
                               std::to_string(limits.max_unary));
    }
  }
}

template <Polymath N>
void check_printable(const N& x, const Limits& limits) {
  if constexpr (std::is_same_v<N, Hfs>) {
    const auto width = x.bit_width();
    if (!width || *width > limits.max_exponent) {
      throw ResourceLimitError(
          "value not materializable: bit width exceeds guard of " +
          std::to_string(limits.max_exponent));
    }
  }
}

}  // namespace detail

inline std::string print_hfs(const Hfs& t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

/// Parses brace notation into canonical form. Rejects duplicate siblings.
inline Hfs parse_hfs(std::string_view text,
                     std::size_t max_depth = detail::kDefaultMaxDepth) {
  detail::Cursor in(text);
  Hfs out = detail::parse_set(in, 0, max_depth);
  in.expect_end();
  return out;
}

template <Polymath N>
std::string print_bij2(const N& x, const Limits& limits = {}) {
  detail::check_printable(x, limits);
  std::string out = "[";
  bool first = true;
  for (N cur = x; !is_zero(cur); cur = cur.pop_bit()) {
    if (!first) out += ',';
    out += is_bit0(cur) ? '0' : '1';
    first = false;
  }
  out += ']';
  return out;
}

template <Polymath N>
N parse_bij2(std::string_view text, const Limits& limits = {}) {
  detail::Cursor in(text);
  in.skip_blanks();
  in.expect('[');
  std::vector<bool> digits_one;
  in.skip_blanks();
  if (in.peek() != ']') {
    for (;;) {
      in.skip_blanks();
      const char c = in.peek();
      if (c != '0' && c != '1') throw SyntaxError("expected 0 or 1", in.position());
      digits_one.push_back(c == '1');
      in.advance();
      in.skip_blanks();
      if (in.peek() != ',') break;
      in.advance();
    }
  }
  in.skip_blanks();
  in.expect(']');
  in.expect_end();
  if constexpr (std::is_same_v<N, Peano>) {
    if (digits_one.size() >= 64) {
      throw ResourceLimitError("value exceeds unary guard of " +
                               std::to_string(limits.max_unary));
    }
  }
  N acc = N::empty();
  for (auto it = digits_one.rbegin(); it != digits_one.rend(); ++it) {
    acc = *it ? acc.push_bit1() : acc.push_bit0();
    if constexpr (std::is_same_v<N, Peano>) {
      if (acc.depth() > limits.max_unary) {
        throw ResourceLimitError("value exceeds unary guard of " +
                                 std::to_string(limits.max_unary));
      }
    }
  }
  return acc;
}

template <Polymath N>
std::string print_decimal(const N& x, const Limits& limits = {}) {
  detail::check_printable(x, limits);
  return view<BigNat>(x).to_decimal();
}

template <Polymath N>
N parse_decimal(std::string_view text, const Limits& limits = {}) {
  std::size_t first = 0;
  while (first < text.size() && (text[first] == ' ' || text[first] == '\t' ||
                                 text[first] == '\n' || text[first] == '\r')) {
    ++first;
  }
  std::size_t last = text.size();
  while (last > first && (text[last - 1] == ' ' || text[last - 1] == '\t' ||
                          text[last - 1] == '\n' || text[last - 1] == '\r')) {
    --last;
  }
  const BigNat value = BigNat::from_decimal(text.substr(first, last - first));
  detail::check_materializable<N>(value, limits);
  return view<N>(value);
}

/// Any of the three formats into any interpretation.
template <Polymath N>
N parse_value(std::string_view text, TextFormat format, const Limits& limits = {}) {
  switch (format) {
    case TextFormat::decimal: return parse_decimal<N>(text, limits);
    case TextFormat::bij2: return parse_bij2<N>(text, limits);
    case TextFormat::hfs: {
      const Hfs tree = parse_hfs(text);
      if constexpr (std::is_same_v<N, Hfs>) {
        return tree;
      } else {
        detail::check_printable(tree, limits);
        const BigNat value = view<BigNat>(tree);
        detail::check_materializable<N>(value, limits);
        return view<N>(value);
      }
    }
  }
  throw SyntaxError("unknown format", 0);
}

template <Polymath N>
std::string print_value(const N& x, TextFormat format, const Limits& limits = {}) {
  switch (format) {
    case TextFormat::decimal: return print_decimal(x, limits);
    case TextFormat::bij2: return print_bij2(x, limits);
    case TextFormat::hfs: {
      if constexpr (std::is_same_v<N, Hfs>) {
        return print_hfs(x);
      } else {
        return print_hfs(view<Hfs>(x));
      }
    }
  }
  return {};
}

}  // namespace polymath
