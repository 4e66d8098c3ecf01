#pragma once

#include <concepts>

namespace polymath {

/// The primitive capability contract. Read a value as a stack of bijective
/// base-2 digits with the least significant digit on top:
///
///   N::empty()       the empty stack, i.e. zero
///   x.top_is_bit0()  true iff the top digit is 0 (x = 2k+1)
///   x.push_bit0()    k -> 2k+1
///   x.push_bit1()    k -> 2k+2
///   x.pop_bit()      2k+1 -> k, 2k+2 -> k; DomainError on zero
///
/// Everything else (successor, arithmetic, order, the set view) is derived
/// from these five in axioms.hpp.
template <class N>
concept Polymath = std::copyable<N> && std::equality_comparable<N> &&
    requires(const N& x) {
      { N::empty() } -> std::same_as<N>;
      { x.top_is_bit0() } -> std::same_as<bool>;
      { x.push_bit0() } -> std::same_as<N>;
      { x.push_bit1() } -> std::same_as<N>;
      { x.pop_bit() } -> std::same_as<N>;
    };

/// Customization point. An interpretation specializes `overrides<N>` with
/// static members named after derived operations (succ, pred, add, compare,
/// set_union, ...); the dispatching functions in axioms.hpp prefer those
/// over the generic algorithms.
template <class N>
struct overrides {};

}  // namespace polymath
