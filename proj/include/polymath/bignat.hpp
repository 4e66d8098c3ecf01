#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polymath/contract.hpp"
#include "polymath/errors.hpp"
#include "polymath/limits.hpp"
#include "polymath/ordering.hpp"

namespace polymath {

/// Arbitrary-precision natural: little-endian 64-bit limbs, no trailing zero
/// limb, empty for zero.
class BigNat {
 public:
  using Limb = std::uint64_t;
  static constexpr unsigned kLimbBits = 64;

  BigNat() = default;
  explicit BigNat(Limb w) {
    if (w != 0) limbs_.push_back(w);
  }

  static BigNat empty() { return BigNat{}; }

  static BigNat from_limbs(std::vector<Limb> limbs) {
    BigNat out;
    out.limbs_ = std::move(limbs);
    out.trim();
    return out;
  }

  /// Non-empty string of ASCII digits, no sign.
  static BigNat from_decimal(std::string_view text) {
    if (text.empty()) throw SyntaxError("expected a decimal number", 0);
    BigNat out;
    std::size_t pos = 0;
    while (pos < text.size()) {
      const std::size_t len = std::min<std::size_t>(19, text.size() - pos);
      Limb chunk = 0;
      Limb scale = 1;
      for (std::size_t k = 0; k < len; ++k) {
        const char c = text[pos + k];
        if (c < '0' || c > '9') {
          throw SyntaxError("expected a decimal digit", pos + k);
        }
        chunk = chunk * 10 + static_cast<Limb>(c - '0');
        scale *= 10;
      }
      out.mul_add_small(scale, chunk);
      pos += len;
    }
    return out;
  }

  std::string to_decimal() const {
    if (limbs_.empty()) return "0";
    constexpr Limb kChunk = 10000000000000000000ull;  // 10^19
    std::vector<Limb> chunks;
    BigNat rest = *this;
    while (!rest.is_zero()) chunks.push_back(rest.divmod_small(kChunk));
    std::string out = std::to_string(chunks.back());
    for (auto it = chunks.rbegin() + 1; it != chunks.rend(); ++it) {
      const std::string part = std::to_string(*it);
      out.append(19 - part.size(), '0');
      out += part;
    }
    return out;
  }

  std::span<const Limb> limbs() const noexcept { return limbs_; }
  bool is_zero() const noexcept { return limbs_.empty(); }
  bool is_normalized() const noexcept {
    return limbs_.empty() || limbs_.back() != 0;
  }

  std::optional<std::uint64_t> to_word() const noexcept {
    if (limbs_.size() > 1) return std::nullopt;
    return limbs_.empty() ? 0 : limbs_[0];
  }

  std::uint64_t bit_length() const noexcept {
    if (limbs_.empty()) return 0;
    return (limbs_.size() - 1) * kLimbBits +
           static_cast<std::uint64_t>(std::bit_width(limbs_.back()));
  }

  std::uint64_t popcount() const noexcept {
    std::uint64_t n = 0;
    for (Limb l : limbs_) n += static_cast<std::uint64_t>(std::popcount(l));
    return n;
  }

  bool test_bit(std::uint64_t index) const noexcept {
    const std::uint64_t limb = index / kLimbBits;
    if (limb >= limbs_.size()) return false;
    return ((limbs_[limb] >> (index % kLimbBits)) & 1) != 0;
  }

  static BigNat power_of_two(std::uint64_t exponent) {
    std::vector<Limb> limbs(exponent / kLimbBits + 1, 0);
    limbs.back() = Limb{1} << (exponent % kLimbBits);
    return from_limbs(std::move(limbs));
  }

  BigNat shifted_left(std::uint64_t bits) const {
    if (limbs_.empty()) return {};
    const std::size_t whole = bits / kLimbBits;
    const unsigned part = bits % kLimbBits;
    std::vector<Limb> out(limbs_.size() + whole + 1, 0);
    for (std::size_t k = 0; k < limbs_.size(); ++k) {
      out[k + whole] |= limbs_[k] << part;
      if (part != 0) out[k + whole + 1] = limbs_[k] >> (kLimbBits - part);
    }
    return from_limbs(std::move(out));
  }

  BigNat shifted_right(std::uint64_t bits) const {
    const std::size_t whole = bits / kLimbBits;
    if (whole >= limbs_.size()) return {};
    const unsigned part = bits % kLimbBits;
    std::vector<Limb> out(limbs_.size() - whole, 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = limbs_[k + whole] >> part;
      if (part != 0 && k + whole + 1 < limbs_.size()) {
        out[k] |= limbs_[k + whole + 1] << (kLimbBits - part);
      }
    }
    return from_limbs(std::move(out));
  }

  // Contract: value 2k+1 is "top digit 0".
  bool top_is_bit0() const noexcept { return test_bit(0); }
  BigNat push_bit0() const { return shifted_left(1) + BigNat{1}; }
  BigNat push_bit1() const { return shifted_left(1) + BigNat{2}; }
  BigNat pop_bit() const {
    if (is_zero()) throw DomainError("pop_bit: zero has no digits");
    return (*this - BigNat{1}).shifted_right(1);
  }

  friend BigNat operator+(const BigNat& a, const BigNat& b) {
    const auto& big = a.limbs_.size() >= b.limbs_.size() ? a.limbs_ : b.limbs_;
    const auto& small = a.limbs_.size() >= b.limbs_.size() ? b.limbs_ : a.limbs_;
    std::vector<Limb> out(big.size() + 1, 0);
    Limb carry = 0;
    for (std::size_t k = 0; k < big.size(); ++k) {
      const unsigned __int128 s = static_cast<unsigned __int128>(big[k]) +
                                  (k < small.size() ? small[k] : 0) + carry;
      out[k] = static_cast<Limb>(s);
      carry = static_cast<Limb>(s >> kLimbBits);
    }
    out[big.size()] = carry;
    return from_limbs(std::move(out));
  }

  /// DomainError when b > a.
  friend BigNat operator-(const BigNat& a, const BigNat& b) {
    if (a < b) throw DomainError("subtract: result would be negative");
    std::vector<Limb> out(a.limbs_.size(), 0);
    Limb borrow = 0;
    for (std::size_t k = 0; k < a.limbs_.size(); ++k) {
      const Limb sub = k < b.limbs_.size() ? b.limbs_[k] : 0;
      const Limb d1 = a.limbs_[k] - sub;
      const Limb b1 = a.limbs_[k] < sub ? 1 : 0;
      out[k] = d1 - borrow;
      borrow = b1 | (d1 < borrow ? 1 : 0);
    }
    return from_limbs(std::move(out));
  }

  friend BigNat operator*(const BigNat& a, const BigNat& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Limb> out(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      Limb carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        const unsigned __int128 t =
            static_cast<unsigned __int128>(a.limbs_[i]) * b.limbs_[j] +
            out[i + j] + carry;
        out[i + j] = static_cast<Limb>(t);
        carry = static_cast<Limb>(t >> kLimbBits);
      }
      out[i + b.limbs_.size()] = carry;
    }
    return from_limbs(std::move(out));
  }

  friend BigNat operator|(const BigNat& a, const BigNat& b) {
    std::vector<Limb> out(std::max(a.limbs_.size(), b.limbs_.size()), 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = a.limb_or_zero(k) | b.limb_or_zero(k);
    }
    return from_limbs(std::move(out));
  }

  friend BigNat operator&(const BigNat& a, const BigNat& b) {
    std::vector<Limb> out(std::min(a.limbs_.size(), b.limbs_.size()), 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = a.limbs_[k] & b.limbs_[k];
    }
    return from_limbs(std::move(out));
  }

  friend BigNat operator^(const BigNat& a, const BigNat& b) {
    std::vector<Limb> out(std::max(a.limbs_.size(), b.limbs_.size()), 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = a.limb_or_zero(k) ^ b.limb_or_zero(k);
    }
    return from_limbs(std::move(out));
  }

  /// a AND (NOT b)
  static BigNat and_not(const BigNat& a, const BigNat& b) {
    std::vector<Limb> out(a.limbs_.size(), 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = a.limbs_[k] & ~b.limb_or_zero(k);
    }
    return from_limbs(std::move(out));
  }

  friend bool operator==(const BigNat&, const BigNat&) = default;

  friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size()) {
      return a.limbs_.size() <=> b.limbs_.size();
    }
    for (std::size_t k = a.limbs_.size(); k > 0; --k) {
      if (a.limbs_[k - 1] != b.limbs_[k - 1]) {
        return a.limbs_[k - 1] <=> b.limbs_[k - 1];
      }
    }
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const BigNat& x) {
    return os << x.to_decimal();
  }

 private:
  Limb limb_or_zero(std::size_t k) const noexcept {
    return k < limbs_.size() ? limbs_[k] : 0;
  }

  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  // *this = *this * factor + addend
  void mul_add_small(Limb factor, Limb addend) {
    Limb carry = addend;
    for (Limb& l : limbs_) {
      const unsigned __int128 t = static_cast<unsigned __int128>(l) * factor + carry;
      l = static_cast<Limb>(t);
      carry = static_cast<Limb>(t >> kLimbBits);
    }
    if (carry != 0) limbs_.push_back(carry);
  }

  // *this /= divisor; returns the remainder
  Limb divmod_small(Limb divisor) {
    unsigned __int128 rem = 0;
    for (std::size_t k = limbs_.size(); k > 0; --k) {
      const unsigned __int128 cur = (rem << kLimbBits) | limbs_[k - 1];
      limbs_[k - 1] = static_cast<Limb>(cur / divisor);
      rem = cur % divisor;
    }
    trim();
    return static_cast<Limb>(rem);
  }

  std::vector<Limb> limbs_;
};

static_assert(Polymath<BigNat>);

/// Fast paths: machine arithmetic and bitwise set algebra.
template <>
struct overrides<BigNat> {
  static bool is_zero(const BigNat& x) { return x.is_zero(); }
  static BigNat one() { return BigNat{1}; }
  static bool is_one(const BigNat& x) { return x == BigNat{1}; }
  static BigNat succ(const BigNat& x) { return x + BigNat{1}; }
  static BigNat pred(const BigNat& x) {
    if (x.is_zero()) throw DomainError("pred: zero has no predecessor");
    return x - BigNat{1};
  }
  static BigNat add(const BigNat& x, const BigNat& y) { return x + y; }
  /// |x - y|; callers outside this interpretation only rely on x >= y.
  static BigNat subtract(const BigNat& x, const BigNat& y) {
    return x < y ? y - x : x - y;
  }
  static Ordering3 compare(const BigNat& x, const BigNat& y) {
    const auto c = x <=> y;
    if (c < 0) return Ordering3::lt;
    if (c > 0) return Ordering3::gt;
    return Ordering3::eq;
  }
  static bool lt(const BigNat& x, const BigNat& y) { return x < y; }
  static BigNat multiply(const BigNat& x, const BigNat& y) { return x * y; }
  static BigNat half(const BigNat& x) { return x.shifted_right(1); }
  static BigNat twice(const BigNat& x) { return x.shifted_left(1); }

  static BigNat exp2(const BigNat& x, const Limits& limits) {
    const auto w = x.to_word();
    if (!w || *w > limits.max_exponent) {
      throw ResourceLimitError("exp2: exponent exceeds guard of " +
                               std::to_string(limits.max_exponent));
    }
    return BigNat::power_of_two(*w);
  }

  static BigNat set_union(const BigNat& x, const BigNat& y) { return x | y; }
  static BigNat set_intersection(const BigNat& x, const BigNat& y) {
    return x & y;
  }
  static BigNat set_difference(const BigNat& x, const BigNat& y) {
    return BigNat::and_not(x, y);
  }

  static bool in_set(const BigNat& x, const BigNat& y, const Limits& limits) {
    const auto index = x.to_word();
    if (!index || *index > limits.max_bit_index) {
      throw ResourceLimitError("in_set: element index exceeds guard of " +
                               std::to_string(limits.max_bit_index));
    }
    return y.test_bit(*index);
  }

  // powset 0 = 1; powset x = xorL (powset (x-1)) where xorL n = n xor (n<<1)
  static BigNat powerset(const BigNat& x, const Limits& limits) {
    if (x.popcount() > limits.max_powerset_elements) {
      throw ResourceLimitError("powerset: base set has more than " +
                               std::to_string(limits.max_powerset_elements) +
                               " elements");
    }
    const auto n = x.to_word();
    if (!n || *n > limits.max_exponent) {
      throw ResourceLimitError("powerset: exponent exceeds guard of " +
                               std::to_string(limits.max_exponent));
    }
    BigNat acc{1};
    for (std::uint64_t k = 0; k < *n; ++k) acc = acc ^ acc.shifted_left(1);
    return acc;
  }

  static std::optional<std::uint64_t> to_word(const BigNat& x) {
    return x.to_word();
  }
  static BigNat from_word(std::uint64_t w) { return BigNat{w}; }
};

}  // namespace polymath
