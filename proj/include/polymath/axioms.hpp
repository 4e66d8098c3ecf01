#pragma once

// Derived operations over any type satisfying the Polymath contract.
//
// Two layers:
//   polymath::generic::*  the default algorithm, always available; used by
//                         tests to check that overrides agree with it.
//   polymath::*           dispatch: overrides<N>::op when the interpretation
//                         provides one, otherwise the generic algorithm.
//
// Generic algorithms call back into the dispatching layer for their
// sub-steps, so an interpretation that overrides succ (say) gets the faster
// succ inside add, multiply and everything built on them.
//
// The digit recursions (add, subtract, compare, multiply, pow, view) are
// unrolled into loops with an explicit stack of pending steps; each step
// applies exactly the clause the recursive definition would.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polymath/contract.hpp"
#include "polymath/errors.hpp"
#include "polymath/limits.hpp"
#include "polymath/ordering.hpp"

namespace polymath {

/// A finite sequence of values; the exponent list of the set view.
template <Polymath N>
using NatSeq = std::vector<N>;

// Dispatching entry points, declared ahead of the generic algorithms that
// use them.
template <Polymath N> bool is_zero(const N& x);
template <Polymath N> bool is_bit0(const N& x);
template <Polymath N> bool is_bit1(const N& x);
template <Polymath N> N one();
template <Polymath N> bool is_one(const N& x);
template <Polymath N> N succ(const N& x);
template <Polymath N> N pred(const N& x);
template <Polymath N> N add(const N& x, const N& y);
template <Polymath N> N subtract(const N& x, const N& y);
template <Polymath N> Ordering3 length_compare(const N& x, const N& y);
template <Polymath N> Ordering3 same_length_compare(const N& x, const N& y);
template <Polymath N> Ordering3 compare(const N& x, const N& y);
template <Polymath N> bool lt(const N& x, const N& y);
template <Polymath N> bool gt(const N& x, const N& y);
template <Polymath N> bool eq(const N& x, const N& y);
template <Polymath N> N multiply(const N& x, const N& y);
template <Polymath N> N twice(const N& x);
template <Polymath N> N half(const N& x);
template <Polymath N> N exp2(const N& x, const Limits& limits = {});
template <Polymath N> N pow(const N& x, const N& y, const Limits& limits = {});
template <Polymath N> NatSeq<N> decode_set(const N& x);
template <Polymath N> N encode_set(const NatSeq<N>& xs, const Limits& limits = {});
template <Polymath N> N set_union(const N& x, const N& y, const Limits& limits = {});
template <Polymath N> N set_intersection(const N& x, const N& y, const Limits& limits = {});
template <Polymath N> N set_difference(const N& x, const N& y, const Limits& limits = {});
template <Polymath N> bool set_subset(const N& x, const N& y, const Limits& limits = {});
template <Polymath N> N powerset(const N& x, const Limits& limits = {});
template <Polymath N> bool in_set(const N& x, const N& y, const Limits& limits = {});
template <Polymath N> N augment_set(const N& x, const Limits& limits = {});
template <Polymath N> N nth_ordinal(const N& n, const Limits& limits = {});
template <Polymath N> std::optional<std::uint64_t> to_word(const N& x);
template <Polymath N> N from_word(std::uint64_t w);

// ---------------------------------------------------------------------------
// Sequence operations used to lift set algebra onto values. They follow the
// list semantics of union / intersect / (\\): order of the first argument is
// kept, membership is decided by ==.

template <Polymath N>
NatSeq<N> seq_union(const NatSeq<N>& xs, const NatSeq<N>& ys) {
  NatSeq<N> out = xs;
  for (const auto& y : ys) {
    if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
  }
  return out;
}

template <Polymath N>
NatSeq<N> seq_intersection(const NatSeq<N>& xs, const NatSeq<N>& ys) {
  NatSeq<N> out;
  for (const auto& x : xs) {
    if (std::find(ys.begin(), ys.end(), x) != ys.end()) out.push_back(x);
  }
  return out;
}

template <Polymath N>
NatSeq<N> seq_difference(const NatSeq<N>& xs, const NatSeq<N>& ys) {
  NatSeq<N> out = xs;
  for (const auto& y : ys) {
    auto it = std::find(out.begin(), out.end(), y);
    if (it != out.end()) out.erase(it);
  }
  return out;
}

/// Conjugates a sequence transform by the decode/encode bijection.
template <Polymath N, class F>
auto lift_set_op1(F f, Limits limits = {}) {
  return [f = std::move(f), limits](const N& x) -> N {
    return encode_set<N>(f(decode_set(x)), limits);
  };
}

template <Polymath N, class F>
auto lift_set_op2(F op, Limits limits = {}) {
  return [op = std::move(op), limits](const N& x, const N& y) -> N {
    return encode_set<N>(op(decode_set(x), decode_set(y)), limits);
  };
}

namespace detail {

inline std::uint64_t word_bit_width(std::uint64_t w) noexcept {
  return static_cast<std::uint64_t>(std::bit_width(w));
}

template <Polymath N>
std::uint64_t exponent_within_guard(const N& x, const Limits& limits,
                                    const char* what) {
  auto w = to_word(x);
  if (!w || *w > limits.max_exponent) {
    throw ResourceLimitError(std::string(what) +
                             ": exponent exceeds guard of " +
                             std::to_string(limits.max_exponent));
  }
  return *w;
}

/// foldr add e (map exp2 xs), without the duplicate check.
template <Polymath N>
N encode_unchecked(const NatSeq<N>& xs, const Limits& limits) {
  N acc = N::empty();
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
    acc = add(exp2(*it, limits), acc);
  }
  return acc;
}

}  // namespace detail

namespace generic {

template <Polymath N>
bool is_zero(const N& x) {
  return x == N::empty();
}

template <Polymath N>
N one() {
  return N::empty().push_bit0();
}

template <Polymath N>
bool is_one(const N& x) {
  return polymath::is_bit0(x) && polymath::is_zero(x.pop_bit());
}

// s e = u;  s (2k+1) = i k;  s (2k+2) = o (s k)
template <Polymath N>
N succ(const N& x) {
  std::size_t carries = 0;
  N cur = x;
  while (!polymath::is_zero(cur) && !polymath::is_bit0(cur)) {
    cur = cur.pop_bit();
    ++carries;
  }
  N result = polymath::is_zero(cur) ? polymath::one<N>()
                                    : cur.pop_bit().push_bit1();
  for (; carries > 0; --carries) result = result.push_bit0();
  return result;
}

// p u = e;  p (2k+1) = i (p k);  p (2k+2) = o k
template <Polymath N>
N pred(const N& x) {
  if (polymath::is_zero(x)) throw DomainError("pred: zero has no predecessor");
  std::size_t borrows = 0;
  N cur = x;
  while (!polymath::is_one(cur) && polymath::is_bit0(cur)) {
    cur = cur.pop_bit();
    ++borrows;
  }
  N result = polymath::is_one(cur) ? N::empty() : cur.pop_bit().push_bit0();
  for (; borrows > 0; --borrows) result = result.push_bit1();
  return result;
}

template <Polymath N>
N add(const N& x, const N& y) {
  enum class Step : unsigned char { push1, succ_push0, succ_push1 };
  std::vector<Step> steps;
  N a = x;
  N b = y;
  while (!polymath::is_zero(a) && !polymath::is_zero(b)) {
    const bool a0 = polymath::is_bit0(a);
    const bool b0 = polymath::is_bit0(b);
    if (a0 && b0) {
      steps.push_back(Step::push1);
    } else if (a0 != b0) {
      steps.push_back(Step::succ_push0);
    } else {
      steps.push_back(Step::succ_push1);
    }
    a = a.pop_bit();
    b = b.pop_bit();
  }
  N acc = polymath::is_zero(a) ? b : a;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    switch (*it) {
      case Step::push1: acc = acc.push_bit1(); break;
      case Step::succ_push0: acc = polymath::succ(acc).push_bit0(); break;
      case Step::succ_push1: acc = polymath::succ(acc).push_bit1(); break;
    }
  }
  return acc;
}

template <Polymath N>
N subtract(const N& x, const N& y) {
  std::vector<bool> pushes_one;
  N z = x;
  N w = y;
  N acc = N::empty();
  for (;;) {
    const bool z0 = polymath::is_zero(z);
    const bool w0 = polymath::is_zero(w);
    if (z0 && w0) break;
    if (w0) {
      acc = z;
      break;
    }
    if (z0) throw DomainError("subtract: result would be negative");
    if (z == w) break;
    const bool zb0 = polymath::is_bit0(z);
    const bool wb0 = polymath::is_bit0(w);
    if (!zb0 && wb0) {
      pushes_one.push_back(false);
      z = z.pop_bit();
      w = w.pop_bit();
    } else {
      // (o,o) -> i, (o,i) -> o, (i,i) -> i; the subtrahend absorbs a borrow
      pushes_one.push_back(zb0 == wb0);
      z = z.pop_bit();
      w = polymath::succ(w.pop_bit());
    }
  }
  for (auto it = pushes_one.rbegin(); it != pushes_one.rend(); ++it) {
    acc = *it ? acc.push_bit1() : acc.push_bit0();
  }
  return acc;
}

template <Polymath N>
Ordering3 length_compare(const N& x, const N& y) {
  N a = x;
  N b = y;
  for (;;) {
    const bool a0 = polymath::is_zero(a);
    const bool b0 = polymath::is_zero(b);
    if (a0 && b0) return Ordering3::eq;
    if (a0) return Ordering3::lt;
    if (b0) return Ordering3::gt;
    a = a.pop_bit();
    b = b.pop_bit();
  }
}

// Digit-by-digit from the least significant end; a differing digit decides
// the order only if all more significant digits tie.
template <Polymath N>
Ordering3 same_length_compare(const N& x, const N& y) {
  std::vector<Ordering3> tie_breaks;  // eq means "pass through"
  N a = x;
  N b = y;
  Ordering3 result;
  for (;;) {
    const bool a0 = polymath::is_zero(a);
    const bool b0 = polymath::is_zero(b);
    if (a0 && b0) { result = Ordering3::eq; break; }
    if (a0) { result = Ordering3::lt; break; }
    if (b0) { result = Ordering3::gt; break; }
    const bool ab0 = polymath::is_bit0(a);
    const bool bb0 = polymath::is_bit0(b);
    if (ab0 == bb0) {
      tie_breaks.push_back(Ordering3::eq);
    } else {
      tie_breaks.push_back(ab0 ? Ordering3::lt : Ordering3::gt);
    }
    a = a.pop_bit();
    b = b.pop_bit();
  }
  for (auto it = tie_breaks.rbegin(); it != tie_breaks.rend(); ++it) {
    if (result == Ordering3::eq) result = *it;
  }
  return result;
}

template <Polymath N>
Ordering3 compare(const N& x, const N& y) {
  const Ordering3 by_length = polymath::length_compare(x, y);
  if (by_length != Ordering3::eq) return by_length;
  return polymath::same_length_compare(x, y);
}

template <Polymath N>
N multiply(const N& x, const N& y) {
  if (polymath::is_zero(x) || polymath::is_zero(y)) return N::empty();
  // x*y = s (h (p x) (p y)) where
  //   h e b = b;  h (2k+1) b = o (h k b);  h (2k+2) b = s (b + o (h k b))
  const N b = polymath::pred(y);
  std::vector<bool> digits_one;
  for (N a = polymath::pred(x); !polymath::is_zero(a); a = a.pop_bit()) {
    digits_one.push_back(!polymath::is_bit0(a));
  }
  N acc = b;
  for (auto it = digits_one.rbegin(); it != digits_one.rend(); ++it) {
    acc = *it ? polymath::succ(polymath::add(b, acc.push_bit0()))
              : acc.push_bit0();
  }
  return polymath::succ(acc);
}

template <Polymath N>
N twice(const N& x) {
  return polymath::pred(x.push_bit0());
}

template <Polymath N>
N half(const N& x) {
  return polymath::succ(x).pop_bit();
}

template <Polymath N>
N exp2(const N& x, const Limits& limits = {}) {
  const std::uint64_t n = detail::exponent_within_guard(x, limits, "exp2");
  N acc = polymath::one<N>();
  for (std::uint64_t k = 0; k < n; ++k) acc = polymath::twice(acc);
  return acc;
}

template <Polymath N>
N pow(const N& x, const N& y, const Limits& limits = {}) {
  if (polymath::is_zero(y)) return polymath::one<N>();
  const auto base = polymath::to_word(x);
  if (!base || *base > 1) {
    const auto e = polymath::to_word(y);
    const std::uint64_t width = base ? detail::word_bit_width(*base) : 0;
    if (!base || !e || *e > limits.max_exponent / width) {
      throw ResourceLimitError("pow: result exceeds magnitude guard of 2^" +
                               std::to_string(limits.max_exponent));
    }
  }
  // pow x (2k+1) = x * pow (x*x) k;  pow x (2k+2) = (x*x) * pow (x*x) k
  std::vector<N> factors;
  N base_power = x;
  N rest = y;
  while (!polymath::is_zero(rest)) {
    const bool digit0 = polymath::is_bit0(rest);
    rest = rest.pop_bit();
    if (digit0) {
      factors.push_back(base_power);
      if (polymath::is_zero(rest)) break;
      base_power = polymath::multiply(base_power, base_power);
    } else {
      base_power = polymath::multiply(base_power, base_power);
      factors.push_back(base_power);
    }
  }
  N acc = polymath::one<N>();
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    acc = polymath::multiply(*it, acc);
  }
  return acc;
}

// Exponents of the ordinary binary expansion, ascending. Parity here is the
// numeric parity (is_bit0 = odd), not the bijective digit stream.
template <Polymath N>
NatSeq<N> decode_set(const N& x) {
  NatSeq<N> out;
  N n = x;
  N exponent = N::empty();
  while (!polymath::is_zero(n)) {
    if (!polymath::is_bit1(n)) out.push_back(exponent);
    n = polymath::half(n);
    exponent = polymath::succ(exponent);
  }
  return out;
}

template <Polymath N>
N encode_set(const NatSeq<N>& xs, const Limits& limits = {}) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) {
        throw DuplicateElementError("encode_set: duplicate element");
      }
    }
  }
  return detail::encode_unchecked(xs, limits);
}

template <Polymath N>
N set_union(const N& x, const N& y, const Limits& limits = {}) {
  return lift_set_op2<N>(seq_union<N>, limits)(x, y);
}

template <Polymath N>
N set_intersection(const N& x, const N& y, const Limits& limits = {}) {
  return lift_set_op2<N>(seq_intersection<N>, limits)(x, y);
}

template <Polymath N>
N set_difference(const N& x, const N& y, const Limits& limits = {}) {
  return lift_set_op2<N>(seq_difference<N>, limits)(x, y);
}

template <Polymath N>
bool set_subset(const N& x, const N& y, const Limits& limits = {}) {
  return x == polymath::set_intersection(x, y, limits);
}

// subsets [] = [[]]; subsets (x:xs) = [zs | ys <- subsets xs, zs <- [ys, x:ys]]
// Each subset is carried as its encoding; encode (x:ys) = exp2 x + encode ys.
template <Polymath N>
N powerset(const N& x, const Limits& limits = {}) {
  const NatSeq<N> elements = polymath::decode_set(x);
  if (elements.size() > limits.max_powerset_elements) {
    throw ResourceLimitError("powerset: base set has more than " +
                             std::to_string(limits.max_powerset_elements) +
                             " elements");
  }
  detail::exponent_within_guard(x, limits, "powerset");
  NatSeq<N> codes{N::empty()};
  for (auto el = elements.rbegin(); el != elements.rend(); ++el) {
    const N weight = polymath::exp2(*el, limits);
    NatSeq<N> next;
    next.reserve(codes.size() * 2);
    for (const auto& ys : codes) {
      next.push_back(ys);
      next.push_back(polymath::add(weight, ys));
    }
    codes = std::move(next);
  }
  return detail::encode_unchecked(codes, limits);
}

template <Polymath N>
bool in_set(const N& x, const N& y, const Limits& limits = {}) {
  return polymath::set_subset(polymath::encode_set(NatSeq<N>{x}, limits), y,
                              limits);
}

template <Polymath N>
N augment_set(const N& x, const Limits& limits = {}) {
  return polymath::set_union(x, polymath::encode_set(NatSeq<N>{x}, limits),
                             limits);
}

template <Polymath N>
N nth_ordinal(const N& n, const Limits& limits = {}) {
  const auto count = polymath::to_word(n);
  if (!count) throw ResourceLimitError("nth_ordinal: index too large");
  N acc = N::empty();
  for (std::uint64_t k = 0; k < *count; ++k) {
    acc = polymath::augment_set(acc, limits);
  }
  return acc;
}

/// The value of x if it fits in 64 bits. Walks at most 64 digits.
template <Polymath N>
std::optional<std::uint64_t> to_word(const N& x) {
  std::vector<bool> digits_one;
  for (N cur = x; !polymath::is_zero(cur); cur = cur.pop_bit()) {
    if (digits_one.size() == 64) return std::nullopt;
    digits_one.push_back(!polymath::is_bit0(cur));
  }
  std::uint64_t value = 0;
  for (auto it = digits_one.rbegin(); it != digits_one.rend(); ++it) {
    const std::uint64_t step = *it ? 2 : 1;
    if (value > (UINT64_MAX - step) / 2) return std::nullopt;
    value = 2 * value + step;
  }
  return value;
}

template <Polymath N>
N from_word(std::uint64_t w) {
  std::vector<bool> digits_one;
  while (w != 0) {
    const bool odd = (w & 1) != 0;
    digits_one.push_back(!odd);
    w = odd ? (w - 1) / 2 : (w - 2) / 2;
  }
  N acc = N::empty();
  for (auto it = digits_one.rbegin(); it != digits_one.rend(); ++it) {
    acc = *it ? acc.push_bit1() : acc.push_bit0();
  }
  return acc;
}

}  // namespace generic

// ---------------------------------------------------------------------------
// Dispatch.

template <Polymath N>
bool is_zero(const N& x) {
  if constexpr (requires { overrides<N>::is_zero(x); }) {
    return overrides<N>::is_zero(x);
  } else {
    return generic::is_zero(x);
  }
}

template <Polymath N>
bool is_bit0(const N& x) {
  return x.top_is_bit0();
}

template <Polymath N>
bool is_bit1(const N& x) {
  return !(is_bit0(x) || is_zero(x));
}

template <Polymath N>
N one() {
  if constexpr (requires { overrides<N>::one(); }) {
    return overrides<N>::one();
  } else {
    return generic::one<N>();
  }
}

template <Polymath N>
bool is_one(const N& x) {
  if constexpr (requires { overrides<N>::is_one(x); }) {
    return overrides<N>::is_one(x);
  } else {
    return generic::is_one(x);
  }
}

template <Polymath N>
N succ(const N& x) {
  if constexpr (requires { overrides<N>::succ(x); }) {
    return overrides<N>::succ(x);
  } else {
    return generic::succ(x);
  }
}

template <Polymath N>
N pred(const N& x) {
  if constexpr (requires { overrides<N>::pred(x); }) {
    return overrides<N>::pred(x);
  } else {
    return generic::pred(x);
  }
}

template <Polymath N>
N add(const N& x, const N& y) {
  if constexpr (requires { overrides<N>::add(x, y); }) {
    return overrides<N>::add(x, y);
  } else {
    return generic::add(x, y);
  }
}

template <Polymath N>
N subtract(const N& x, const N& y) {
  if constexpr (requires { overrides<N>::subtract(x, y); }) {
    return overrides<N>::subtract(x, y);
  } else {
    return generic::subtract(x, y);
  }
}

template <Polymath N>
Ordering3 length_compare(const N& x, const N& y) {
  return generic::length_compare(x, y);
}

template <Polymath N>
Ordering3 same_length_compare(const N& x, const N& y) {
  return generic::same_length_compare(x, y);
}

template <Polymath N>
Ordering3 compare(const N& x, const N& y) {
  if constexpr (requires { overrides<N>::compare(x, y); }) {
    return overrides<N>::compare(x, y);
  } else {
    return generic::compare(x, y);
  }
}

template <Polymath N>
bool lt(const N& x, const N& y) {
  if constexpr (requires { overrides<N>::lt(x, y); }) {
    return overrides<N>::lt(x, y);
  } else {
    return compare(x, y) == Ordering3::lt;
  }
}

template <Polymath N>
bool gt(const N& x, const N& y) {
  return compare(x, y) == Ordering3::gt;
}

template <Polymath N>
bool eq(const N& x, const N& y) {
  return compare(x, y) == Ordering3::eq;
}

template <Polymath N>
N multiply(const N& x, const N& y) {
  if constexpr (requires { overrides<N>::multiply(x, y); }) {
    return overrides<N>::multiply(x, y);
  } else {
    return generic::multiply(x, y);
  }
}

template <Polymath N>
N twice(const N& x) {
  if constexpr (requires { overrides<N>::twice(x); }) {
    return overrides<N>::twice(x);
  } else {
    return generic::twice(x);
  }
}

template <Polymath N>
N half(const N& x) {
  if constexpr (requires { overrides<N>::half(x); }) {
    return overrides<N>::half(x);
  } else {
    return generic::half(x);
  }
}

template <Polymath N>
N exp2(const N& x, const Limits& limits) {
  if constexpr (requires { overrides<N>::exp2(x, limits); }) {
    return overrides<N>::exp2(x, limits);
  } else {
    return generic::exp2(x, limits);
  }
}

template <Polymath N>
N pow(const N& x, const N& y, const Limits& limits) {
  return generic::pow(x, y, limits);
}

template <Polymath N>
NatSeq<N> decode_set(const N& x) {
  return generic::decode_set(x);
}

template <Polymath N>
N encode_set(const NatSeq<N>& xs, const Limits& limits) {
  return generic::encode_set(xs, limits);
}

template <Polymath N>
N set_union(const N& x, const N& y, const Limits& limits) {
  if constexpr (requires { overrides<N>::set_union(x, y); }) {
    return overrides<N>::set_union(x, y);
  } else {
    return generic::set_union(x, y, limits);
  }
}

template <Polymath N>
N set_intersection(const N& x, const N& y, const Limits& limits) {
  if constexpr (requires { overrides<N>::set_intersection(x, y); }) {
    return overrides<N>::set_intersection(x, y);
  } else {
    return generic::set_intersection(x, y, limits);
  }
}

template <Polymath N>
N set_difference(const N& x, const N& y, const Limits& limits) {
  if constexpr (requires { overrides<N>::set_difference(x, y); }) {
    return overrides<N>::set_difference(x, y);
  } else {
    return generic::set_difference(x, y, limits);
  }
}

template <Polymath N>
bool set_subset(const N& x, const N& y, const Limits& limits) {
  return generic::set_subset(x, y, limits);
}

template <Polymath N>
N powerset(const N& x, const Limits& limits) {
  if constexpr (requires { overrides<N>::powerset(x, limits); }) {
    return overrides<N>::powerset(x, limits);
  } else {
    return generic::powerset(x, limits);
  }
}

template <Polymath N>
bool in_set(const N& x, const N& y, const Limits& limits) {
  if constexpr (requires { overrides<N>::in_set(x, y, limits); }) {
    return overrides<N>::in_set(x, y, limits);
  } else {
    return generic::in_set(x, y, limits);
  }
}

template <Polymath N>
N augment_set(const N& x, const Limits& limits) {
  return generic::augment_set(x, limits);
}

template <Polymath N>
N nth_ordinal(const N& n, const Limits& limits) {
  return generic::nth_ordinal(n, limits);
}

template <Polymath N>
std::optional<std::uint64_t> to_word(const N& x) {
  if constexpr (requires { overrides<N>::to_word(x); }) {
    return overrides<N>::to_word(x);
  } else {
    return generic::to_word(x);
  }
}

template <Polymath N>
N from_word(std::uint64_t w) {
  if constexpr (requires { overrides<N>::from_word(w); }) {
    return overrides<N>::from_word(w);
  } else {
    return generic::from_word<N>(w);
  }
}

/// Value-preserving conversion between interpretations, digit by digit.
template <Polymath B, Polymath A>
B view(const A& x) {
  if constexpr (std::is_same_v<A, B>) {
    return x;
  } else {
    std::vector<bool> digits_one;
    for (A cur = x; !is_zero(cur); cur = cur.pop_bit()) {
      digits_one.push_back(!is_bit0(cur));
    }
    B acc = B::empty();
    for (auto it = digits_one.rbegin(); it != digits_one.rend(); ++it) {
      acc = *it ? acc.push_bit1() : acc.push_bit0();
    }
    return acc;
  }
}

}  // namespace polymath
