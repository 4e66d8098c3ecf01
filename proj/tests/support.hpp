#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gtest/gtest.h>

#include "polymath/oracle.hpp"
#include "polymath/polymath.hpp"

namespace polymath::testing {

using Interpretations = ::testing::Types<Peano, BitStack, Hfs, BigNat>;

struct ReprNames {
  template <class N>
  static std::string GetName(int) {
    if constexpr (std::is_same_v<N, Peano>) return "Peano";
    if constexpr (std::is_same_v<N, BitStack>) return "BitStack";
    if constexpr (std::is_same_v<N, Hfs>) return "Hfs";
    if constexpr (std::is_same_v<N, BigNat>) return "BigNat";
  }
};

template <Polymath N>
N nat(std::uint64_t w) {
  return from_word<N>(w);
}

template <Polymath N>
std::uint64_t word(const N& x) {
  const auto w = to_word(x);
  if (!w) ADD_FAILURE() << "value does not fit a word";
  return w.value_or(0);
}

template <Polymath N>
std::vector<std::uint64_t> words(const NatSeq<N>& xs) {
  std::vector<std::uint64_t> out;
  for (const auto& x : xs) out.push_back(word(x));
  return out;
}

template <Polymath N>
NatSeq<N> nats(const std::vector<std::uint64_t>& ws) {
  NatSeq<N> out;
  for (auto w : ws) out.push_back(nat<N>(w));
  return out;
}

/// Unary representations get a smaller test range.
template <Polymath N>
std::uint64_t cap(std::uint64_t bound) {
  return std::is_same_v<N, Peano> ? std::min<std::uint64_t>(bound, 64) : bound;
}

/// Rewrites constructor notation "S [S [],S [S []]]" into brace notation.
inline std::string braces_of_constructor_text(std::string_view text) {
  std::string out;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char c = text[k];
    if (c == 'S') {
      while (k + 1 < text.size() && text[k + 1] == ' ') ++k;
      continue;
    }
    if (c == '[') out += '{';
    else if (c == ']') out += '}';
    else if (c == ',') out += ',';
  }
  return out;
}

inline Hfs tree(std::string_view constructor_text) {
  return parse_hfs(braces_of_constructor_text(constructor_text));
}

/// Singleton nesting: depth 0 is {}, depth 1 is {{}}, ...
inline Hfs singleton_chain(std::size_t depth) {
  Hfs t = Hfs::empty();
  for (std::size_t k = 0; k < depth; ++k) t = Hfs::singleton(t);
  return t;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed1234abcdULL);
  return gen;
}

}  // namespace polymath::testing
