#pragma once

// Brute-force reference implementations over machine words. Nothing here
// calls into axioms.hpp: agreement between the two is evidence, not a
// tautology. Hfs trees are read and built through their children only.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "polymath/errors.hpp"
#include "polymath/hfs.hpp"
#include "polymath/ordering.hpp"

namespace polymath::oracle {

using WordNat = std::uint64_t;

/// A result did not fit the word; a test-infrastructure error.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

enum class WordOp { add, subtract, multiply, pow, half, twice, exp2, compare };

inline WordNat add(WordNat x, WordNat y) {
  WordNat r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("oracle add");
  return r;
}

inline WordNat subtract(WordNat x, WordNat y) {
  if (y > x) throw OverflowError("oracle subtract below zero");
  return x - y;
}

inline WordNat multiply(WordNat x, WordNat y) {
  WordNat r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("oracle multiply");
  return r;
}

/// Repeated multiplication; 0^0 = 1.
inline WordNat pow(WordNat x, WordNat y) {
  WordNat r = 1;
  for (WordNat k = 0; k < y; ++k) {
    r = multiply(r, x);
    if (r == 0 || r == 1) break;
  }
  return r;
}

inline WordNat half(WordNat x) { return x / 2; }
inline WordNat twice(WordNat x) { return multiply(x, 2); }

inline WordNat exp2(WordNat x) {
  if (x >= 64) throw OverflowError("oracle exp2");
  return WordNat{1} << x;
}

inline Ordering3 compare(WordNat x, WordNat y) {
  if (x < y) return Ordering3::lt;
  if (x > y) return Ordering3::gt;
  return Ordering3::eq;
}

using WordResult = std::variant<WordNat, Ordering3>;

inline WordResult word_arith(WordOp op, WordNat x, WordNat y = 0) {
  switch (op) {
    case WordOp::add: return add(x, y);
    case WordOp::subtract: return subtract(x, y);
    case WordOp::multiply: return multiply(x, y);
    case WordOp::pow: return pow(x, y);
    case WordOp::half: return half(x);
    case WordOp::twice: return twice(x);
    case WordOp::exp2: return exp2(x);
    case WordOp::compare: return compare(x, y);
  }
  throw std::invalid_argument("oracle: unknown op");
}

// Bit-level set algebra: a word is the set of its one-bit positions.

inline WordNat set_union(WordNat x, WordNat y) { return x | y; }
inline WordNat set_intersection(WordNat x, WordNat y) { return x & y; }
inline WordNat set_difference(WordNat x, WordNat y) { return x & ~y; }
inline bool set_subset(WordNat x, WordNat y) { return (x & ~y) == 0; }
inline bool in_set(WordNat x, WordNat y) { return x < 64 && ((y >> x) & 1) != 0; }
inline WordNat augment_set(WordNat x) { return x | exp2(x); }

inline std::vector<WordNat> bit_positions(WordNat x) {
  std::vector<WordNat> out;
  for (WordNat b = 0; b < 64; ++b) {
    if ((x >> b) & 1) out.push_back(b);
  }
  return out;
}

inline WordNat from_bit_positions(const std::vector<WordNat>& positions) {
  WordNat out = 0;
  for (WordNat b : positions) {
    const WordNat bit = exp2(b);
    if (out & bit) throw std::invalid_argument("oracle: repeated position");
    out |= bit;
  }
  return out;
}

/// {0, 1, ..., n-1} encoded, by iterating x -> x | 2^x.
inline WordNat nth_ordinal(WordNat n) {
  WordNat x = 0;
  for (WordNat k = 0; k < n; ++k) x = augment_set(x);
  return x;
}

/// Ackermann value of a tree: 0 for {}, otherwise the sum of 2^child.
inline WordNat nat_of_hfs(const Hfs& t) {
  WordNat sum = 0;
  for (const auto& child : t.children()) {
    sum = add(sum, exp2(nat_of_hfs(child)));
  }
  return sum;
}

inline Hfs hfs_of_nat(WordNat n) {
  std::vector<Hfs> children;
  for (WordNat b : bit_positions(n)) children.push_back(hfs_of_nat(b));
  return Hfs::from_canonical_children(std::move(children));
}

/// Bit positions (ascending) of sum over all subsets S of the bit positions
/// of n of 2^(sum_{b in S} 2^b). Enumerates subsets explicitly.
inline std::vector<WordNat> brute_powerset_bits(WordNat n) {
  const std::vector<WordNat> base = bit_positions(n);
  if (base.size() > 24) {
    throw ResourceLimitError("oracle powerset: more than 24 elements");
  }
  std::vector<WordNat> codes;
  const WordNat subsets = WordNat{1} << base.size();
  codes.reserve(subsets);
  for (WordNat pick = 0; pick < subsets; ++pick) {
    WordNat code = 0;
    for (std::size_t k = 0; k < base.size(); ++k) {
      if ((pick >> k) & 1) code += WordNat{1} << base[k];
    }
    codes.push_back(code);
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

/// brute_powerset_bits as a word; OverflowError when it does not fit.
inline WordNat brute_powerset(WordNat n) {
  return from_bit_positions(brute_powerset_bits(n));
}

/// Bijective base-2 digits, least significant first: the binary expansion
/// of n+1 with its leading one removed.
inline std::vector<int> bijective_digits_of_nat(WordNat n) {
  if (n == UINT64_MAX) throw OverflowError("oracle bijective digits");
  const WordNat m = n + 1;
  const int width = std::bit_width(m);
  std::vector<int> digits;
  for (int b = 0; b + 1 < width; ++b) digits.push_back((m >> b) & 1);
  return digits;
}

/// Digit d at position i contributes (d+1) * 2^i.
inline WordNat nat_of_bijective_digits(const std::vector<int>& digits) {
  WordNat value = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (digits[i] != 0 && digits[i] != 1) {
      throw std::invalid_argument("oracle: digit must be 0 or 1");
    }
    if (i >= 64) throw OverflowError("oracle bijective value");
    value = add(value, multiply(static_cast<WordNat>(digits[i] + 1),
                                WordNat{1} << i));
  }
  return value;
}

}  // namespace polymath::oracle
