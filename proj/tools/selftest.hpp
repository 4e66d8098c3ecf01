#pragma once

// Property suite behind `polymath selftest`: every interpretation against
// the word oracle, every ordered pair of interpretations against each other,
// and the fixed-size checks (xor powerset, Hfs well-ordering).

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <vector>

#include "polymath/oracle.hpp"
#include "polymath/polymath.hpp"

namespace polymath::selftest {

struct Tally {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& describe) {
    if (ok) {
      ++passed;
    } else {
      if (failed == 0) first_failure = describe();
      ++failed;
    }
  }
};

class Report {
 public:
  Tally& add(std::string name) {
    tallies_.emplace_back();
    tallies_.back().name = std::move(name);
    return tallies_.back();
  }

  bool ok() const {
    for (const auto& t : tallies_) {
      if (t.failed != 0) return false;
    }
    return true;
  }

  void print(std::ostream& os) const {
    for (const auto& t : tallies_) {
      os << (t.failed == 0 ? "PASS " : "FAIL ") << t.name
         << " passed=" << t.passed << " failed=" << t.failed;
      if (t.failed != 0) os << " first: " << t.first_failure;
      os << '\n';
    }
  }

 private:
  std::deque<Tally> tallies_;
};

template <class N>
constexpr std::string_view repr_name() {
  if constexpr (std::is_same_v<N, Peano>) return "peano";
  else if constexpr (std::is_same_v<N, BitStack>) return "bitstack";
  else if constexpr (std::is_same_v<N, Hfs>) return "hfs";
  else return "bignat";
}

/// Largest operand and result the interpretation is exercised on.
template <class N>
struct Caps {
  std::uint64_t operand;
  std::uint64_t result;
};

template <class N>
Caps<N> caps_for(std::uint64_t bound) {
  if constexpr (std::is_same_v<N, Peano>) {
    return {std::min<std::uint64_t>(bound, 64), 4096};
  } else {
    return {bound, UINT64_MAX};
  }
}

inline std::string pair_text(std::uint64_t x, std::uint64_t y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

template <class N>
std::optional<std::uint64_t> word_of(const N& x) {
  return to_word(x);
}

template <class N>
void contract_laws(Report& report, std::uint64_t bound) {
  auto& t = report.add("contract laws [" + std::string(repr_name<N>()) + "]");
  const auto cap = caps_for<N>(bound);
  for (std::uint64_t v = 0; v <= std::min<std::uint64_t>(cap.operand, 512); ++v) {
    const N x = from_word<N>(v);
    const auto say = [v] { return "x=" + std::to_string(v); };
    t.expect(x.push_bit0().pop_bit() == x, say);
    t.expect(x.push_bit1().pop_bit() == x, say);
    t.expect(is_bit0(x.push_bit0()) && is_bit1(x.push_bit1()), say);
    const int kinds = int(is_zero(x)) + int(is_bit0(x)) + int(is_bit1(x));
    t.expect(kinds == 1, say);
    t.expect(word_of(x) == v, say);
    t.expect(word_of(succ(x)) == v + 1, say);
    t.expect(pred(succ(x)) == x, say);
    if (v > 0) t.expect(succ(pred(x)) == x, say);
  }
}

template <class N>
void oracle_agreement(Report& report, std::uint64_t bound) {
  auto& t = report.add("oracle agreement [" + std::string(repr_name<N>()) + "]");
  const auto cap = caps_for<N>(bound);
  std::vector<N> vals;
  for (std::uint64_t v = 0; v <= cap.operand; ++v) vals.push_back(from_word<N>(v));
  const auto fits = [&](std::uint64_t r) { return r <= cap.result; };
  for (std::uint64_t x = 0; x <= cap.operand; ++x) {
    const N& a = vals[x];
    const auto say = [x] { return "x=" + std::to_string(x); };
    t.expect(word_of(twice(a)) == oracle::twice(x), say);
    t.expect(word_of(half(a)) == oracle::half(x), say);
    if (x < 64 && fits(oracle::exp2(x))) {
      t.expect(word_of(exp2(a)) == oracle::exp2(x), say);
      t.expect(word_of(augment_set(a)) == oracle::augment_set(x), say);
    }
    const auto seq = decode_set(a);
    std::vector<std::uint64_t> exps;
    for (const auto& e : seq) exps.push_back(word_of(e).value_or(UINT64_MAX));
    t.expect(exps == oracle::bit_positions(x), say);
    t.expect(encode_set(seq) == a, say);
  }
  for (std::uint64_t x = 0; x <= cap.operand; ++x) {
    for (std::uint64_t y = 0; y <= cap.operand; ++y) {
      const N& a = vals[x];
      const N& b = vals[y];
      const auto say = [x, y] { return pair_text(x, y); };
      t.expect(word_of(add(a, b)) == oracle::add(x, y), say);
      if (x >= y) t.expect(word_of(subtract(a, b)) == oracle::subtract(x, y), say);
      if (fits(x * y)) t.expect(word_of(multiply(a, b)) == oracle::multiply(x, y), say);
      t.expect(compare(a, b) == oracle::compare(x, y), say);
      t.expect(word_of(set_union(a, b)) == oracle::set_union(x, y), say);
      t.expect(word_of(set_intersection(a, b)) == oracle::set_intersection(x, y), say);
      t.expect(word_of(set_difference(a, b)) == oracle::set_difference(x, y), say);
      t.expect(set_subset(a, b) == oracle::set_subset(x, y), say);
      if (x < 64 && fits(oracle::exp2(x))) {
        t.expect(in_set(a, b) == oracle::in_set(x, y), say);
      }
      if (x <= 16 && y <= 16) {
        std::optional<std::uint64_t> expected;
        try {
          expected = oracle::pow(x, y);
        } catch (const oracle::OverflowError&) {
        }
        if (expected && fits(*expected)) {
          t.expect(word_of(pow(a, b)) == expected, say);
        }
      }
    }
  }
}

// Results of every checked operation on one interpretation, memoized so each
// ordered pair of interpretations only pays for the views.
template <class N>
struct OpTable {
  std::uint64_t range = 0;
  std::vector<N> operands;
  std::map<std::string, std::vector<std::optional<N>>> unary;
  std::map<std::string, std::vector<std::optional<N>>> binary;
  std::vector<std::optional<Ordering3>> compares;
  std::vector<std::optional<bool>> memberships;
  std::vector<NatSeq<N>> decoded;
};

template <class N>
OpTable<N> build_table(std::uint64_t range) {
  const auto cap = caps_for<N>(range);
  OpTable<N> tb;
  tb.range = std::min(range, cap.operand);
  const auto fits = [&](std::uint64_t r) { return r <= cap.result; };
  const auto power_fits = [&](std::uint64_t x) {
    return cap.result == UINT64_MAX || (x < 64 && fits(std::uint64_t{1} << x));
  };
  for (std::uint64_t v = 0; v <= tb.range; ++v) tb.operands.push_back(from_word<N>(v));
  const std::size_t side = tb.range + 1;
  for (const char* name : {"succ", "pred", "exp2", "augment", "encode"}) {
    tb.unary[name].resize(side);
  }
  for (const char* name : {"add", "subtract", "multiply", "union", "inter", "diff"}) {
    tb.binary[name].resize(side * side);
  }
  tb.compares.resize(side * side);
  tb.memberships.resize(side * side);
  for (std::uint64_t x = 0; x <= tb.range; ++x) {
    const N& a = tb.operands[x];
    tb.unary["succ"][x] = succ(a);
    if (x > 0) tb.unary["pred"][x] = pred(a);
    if (power_fits(x)) {
      tb.unary["exp2"][x] = exp2(a);
      tb.unary["augment"][x] = augment_set(a);
    }
    tb.decoded.push_back(decode_set(a));
    tb.unary["encode"][x] = encode_set(tb.decoded.back());
    for (std::uint64_t y = 0; y <= tb.range; ++y) {
      const N& b = tb.operands[y];
      const std::size_t k = x * side + y;
      tb.binary["add"][k] = add(a, b);
      if (x >= y) tb.binary["subtract"][k] = subtract(a, b);
      if (fits(x * y)) tb.binary["multiply"][k] = multiply(a, b);
      tb.binary["union"][k] = set_union(a, b);
      tb.binary["inter"][k] = set_intersection(a, b);
      tb.binary["diff"][k] = set_difference(a, b);
      tb.compares[k] = compare(a, b);
      if (power_fits(x)) tb.memberships[k] = in_set(a, b);
    }
  }
  return tb;
}

/// view_B(op_A(x, y)) == op_B(view_B x, view_B y) on the common range.
template <class A, class B>
void cross_check(Report& report, const OpTable<A>& ta, const OpTable<B>& tb) {
  auto& t = report.add("cross-instance [" + std::string(repr_name<A>()) + " -> " +
                       std::string(repr_name<B>()) + "]");
  const std::uint64_t range = std::min(ta.range, tb.range);
  const std::size_t sa = ta.range + 1;
  const std::size_t sb = tb.range + 1;
  for (std::uint64_t x = 0; x <= range; ++x) {
    const auto say = [x] { return "x=" + std::to_string(x); };
    t.expect(view<B>(ta.operands[x]) == tb.operands[x], say);
    for (const auto& [name, col] : ta.unary) {
      const auto& ra = col[x];
      const auto& rb = tb.unary.at(name)[x];
      if (ra && rb) t.expect(view<B>(*ra) == *rb, [&] { return name + " x=" + std::to_string(x); });
    }
    const auto& da = ta.decoded[x];
    const auto& db = tb.decoded[x];
    bool same = da.size() == db.size();
    for (std::size_t k = 0; same && k < da.size(); ++k) same = view<B>(da[k]) == db[k];
    t.expect(same, [x] { return "decode x=" + std::to_string(x); });
    for (std::uint64_t y = 0; y <= range; ++y) {
      const std::size_t ka = x * sa + y;
      const std::size_t kb = x * sb + y;
      for (const auto& [name, col] : ta.binary) {
        const auto& ra = col[ka];
        const auto& rb = tb.binary.at(name)[kb];
        if (ra && rb) {
          t.expect(view<B>(*ra) == *rb, [&] { return name + " " + pair_text(x, y); });
        }
      }
      t.expect(ta.compares[ka] == tb.compares[kb], [&] { return "compare " + pair_text(x, y); });
      if (ta.memberships[ka] && tb.memberships[kb]) {
        t.expect(ta.memberships[ka] == tb.memberships[kb], [&] { return "in " + pair_text(x, y); });
      }
    }
  }
}

template <class A, class B>
void cross_check_if_distinct(Report& report, const OpTable<A>& ta, const OpTable<B>& tb) {
  if constexpr (!std::is_same_v<A, B>) cross_check(report, ta, tb);
}

template <class A, class... Bs>
void cross_check_from(Report& report, const OpTable<A>& ta,
                      const std::tuple<OpTable<Bs>...>& tables) {
  std::apply([&](const auto&... tb) { (cross_check_if_distinct(report, ta, tb), ...); },
             tables);
}

inline void ackermann_bijection(Report& report, std::uint64_t bound) {
  auto& t = report.add("ackermann codec [hfs]");
  for (std::uint64_t n = 0; n <= bound; ++n) {
    const auto say = [n] { return "n=" + std::to_string(n); };
    const Hfs tree = oracle::hfs_of_nat(n);
    t.expect(oracle::nat_of_hfs(tree) == n, say);
    t.expect(tree.is_canonical(), say);
    t.expect(from_word<Hfs>(n) == tree, say);
    t.expect(to_word(view<BigNat>(tree)) == n, say);
  }
}

inline void xor_powerset(Report& report, std::uint64_t upto) {
  auto& t = report.add("xor powerset vs brute force [0.." + std::to_string(upto) + "]");
  for (std::uint64_t n = 0; n <= upto; ++n) {
    const BigNat p = powerset(BigNat{n});
    const auto expected = oracle::brute_powerset_bits(n);
    bool ok = p.popcount() == expected.size();
    for (std::size_t k = 0; ok && k < expected.size(); ++k) ok = p.test_bit(expected[k]);
    t.expect(ok, [n] { return "n=" + std::to_string(n); });
  }
}

template <class N>
void powerset_cardinality(Report& report, std::uint64_t bound) {
  auto& t = report.add("powerset cardinality [" + std::string(repr_name<N>()) + "]");
  const std::uint64_t cap = std::is_same_v<N, BigNat> ? 512 : 128;
  const std::uint64_t limit = std::min(bound, cap);
  for (std::uint64_t n = 0; n <= limit; ++n) {
    const N x = from_word<N>(n);
    const std::size_t base = decode_set(x).size();
    const std::size_t subsets = decode_set(powerset(x)).size();
    t.expect(subsets == (std::size_t{1} << base), [n] { return "n=" + std::to_string(n); });
  }
}

inline void hfs_well_ordering(Report& report) {
  auto& t = report.add("hfs well-ordering [1000 successors]");
  std::vector<Hfs> chain{Hfs::empty()};
  while (chain.size() < 1000) chain.push_back(succ(chain.back()));
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    t.expect(lt(chain[k], chain[k + 1]), [k] { return "k=" + std::to_string(k); });
  }
}

template <class N>
void override_agreement(Report& report, std::uint64_t bound) {
  auto& t = report.add("overrides match generic [" + std::string(repr_name<N>()) + "]");
  const std::uint64_t range = std::min<std::uint64_t>(bound, 64);
  for (std::uint64_t x = 0; x <= bound; ++x) {
    const N a = from_word<N>(x);
    const auto say = [x] { return "x=" + std::to_string(x); };
    t.expect(succ(a) == generic::succ(a), say);
    if (x > 0) t.expect(pred(a) == generic::pred(a), say);
    t.expect(half(a) == generic::half(a), say);
    t.expect(twice(a) == generic::twice(a), say);
    if (x <= range) t.expect(powerset(a) == generic::powerset(a), say);
  }
  for (std::uint64_t x = 0; x <= range; ++x) {
    for (std::uint64_t y = 0; y <= range; ++y) {
      const N a = from_word<N>(x);
      const N b = from_word<N>(y);
      const auto say = [x, y] { return pair_text(x, y); };
      t.expect(add(a, b) == generic::add(a, b), say);
      if (x >= y) t.expect(subtract(a, b) == generic::subtract(a, b), say);
      t.expect(multiply(a, b) == generic::multiply(a, b), say);
      t.expect(compare(a, b) == generic::compare(a, b), say);
      t.expect(set_union(a, b) == generic::set_union(a, b), say);
      t.expect(set_intersection(a, b) == generic::set_intersection(a, b), say);
      t.expect(set_difference(a, b) == generic::set_difference(a, b), say);
      t.expect(in_set(a, b) == generic::in_set(a, b), say);
    }
  }
}

/// Runs everything with operands in 0..bound (Peano capped at 64).
inline Report run(std::uint64_t bound) {
  Report report;
  contract_laws<Peano>(report, bound);
  contract_laws<BitStack>(report, bound);
  contract_laws<Hfs>(report, bound);
  contract_laws<BigNat>(report, bound);
  oracle_agreement<Peano>(report, bound);
  oracle_agreement<BitStack>(report, bound);
  oracle_agreement<Hfs>(report, bound);
  oracle_agreement<BigNat>(report, bound);
  {
    const auto tables = std::make_tuple(build_table<Peano>(bound), build_table<BitStack>(bound),
                                        build_table<Hfs>(bound), build_table<BigNat>(bound));
    std::apply([&](const auto&... ta) { (cross_check_from(report, ta, tables), ...); }, tables);
  }
  ackermann_bijection(report, std::max<std::uint64_t>(bound, 4096));
  powerset_cardinality<BitStack>(report, bound);
  powerset_cardinality<Hfs>(report, bound);
  powerset_cardinality<BigNat>(report, bound);
  override_agreement<Hfs>(report, bound);
  override_agreement<BigNat>(report, bound);
  xor_powerset(report, 4096);
  hfs_well_ordering(report);
  return report;
}

}  // namespace polymath::selftest
