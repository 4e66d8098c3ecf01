#pragma once

#include <cstdint>

namespace polymath {

/// Magnitude guards for the operations whose results grow as towers.
/// Exceeding one raises ResourceLimitError instead of exhausting memory.
struct Limits {
  /// Largest x accepted by exp2(x); also bounds pow, powerset and the bit
  /// width of values rendered as text.
  std::uint64_t max_exponent = std::uint64_t{1} << 20;
  /// Largest base set (number of elements) accepted by powerset.
  std::uint64_t max_powerset_elements = 24;
  /// Largest element index accepted by the bit-test fast path of in_set.
  std::uint64_t max_bit_index = std::uint64_t{1} << 32;
  /// Largest value materialized as a unary numeral from text.
  std::uint64_t max_unary = std::uint64_t{1} << 16;
};

}  // namespace polymath
