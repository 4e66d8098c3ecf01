// Acceptance run: one PASS/FAIL line per criterion, with wall time.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polymath/oracle.hpp"
#include "polymath/polymath.hpp"
#include "selftest.hpp"

namespace {

using namespace polymath;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      if (failures_ == 0) first_ = what;
      ++failures_;
    }
  }
  std::uint64_t checks() const { return checks_; }
  Outcome outcome(std::string detail) const {
    if (failures_ == 0) return {true, std::move(detail)};
    return {false, std::to_string(failures_) + " of " + std::to_string(checks_) +
                       " checks failed, first: " + first_};
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_;
};

Hfs from_constructor_text(std::string_view text) {
  std::string braces;
  for (char c : text) {
    if (c == '[') braces += '{';
    if (c == ']') braces += '}';
    if (c == ',') braces += ',';
  }
  return parse_hfs(braces);
}

template <Polymath N>
std::uint64_t w(const N& x) {
  return to_word(x).value_or(UINT64_MAX);
}

template <Polymath N>
void bij2_table_for(Check& c, const char* name) {
  const std::vector<std::string> table{"[]", "[0]", "[1]", "[0,0]", "[1,0]", "[0,1]", "[1,1]"};
  N x = N::empty();
  for (std::uint64_t n = 0; n < table.size(); ++n, x = succ(x)) {
    c.expect(print_bij2(x) == table[n], std::string(name) + " n=" + std::to_string(n));
    c.expect(parse_bij2<N>(table[n]) == x, std::string(name) + " parse n=" + std::to_string(n));
  }
}

Outcome bijective_table() {
  Check c;
  bij2_table_for<Peano>(c, "peano");
  bij2_table_for<BitStack>(c, "bitstack");
  bij2_table_for<Hfs>(c, "hfs");
  bij2_table_for<BigNat>(c, "bignat");
  const std::vector<std::vector<int>> digits{{}, {0}, {1}, {0, 0}, {1, 0}, {0, 1}, {1, 1}};
  for (std::uint64_t n = 0; n < digits.size(); ++n) {
    c.expect(oracle::bijective_digits_of_nat(n) == digits[n], "oracle n=" + std::to_string(n));
    c.expect(BitStack::from_digits(digits[n]) == from_word<BitStack>(n),
             "stack n=" + std::to_string(n));
  }
  return c.outcome("digits of 0..6 exact on all four interpretations");
}

Outcome transcripts() {
  Check c;
  c.expect(add(Peano::from_depth(1), Peano::from_depth(1)) == Peano::from_depth(2), "1+1");
  const Hfs two = succ(succ(Hfs::empty()));
  const Hfs three = succ(two);
  const Hfs six = multiply(two, three);
  c.expect(six == from_constructor_text("S [S [S []],S [S [S []]]]"), "2*3 tree");
  c.expect(view<Peano>(six) == Peano::from_depth(6), "2*3 as peano");
  const Hfs eight = pow(two, three);
  c.expect(eight == from_constructor_text("S [S [S [],S [S []]]]"), "2^3 tree");
  c.expect(view<Peano>(eight) == Peano::from_depth(8), "2^3 as peano");
  const Hfs five = Hfs::empty().push_bit1().push_bit0();
  c.expect(five == from_constructor_text("S [S [],S [S [S []]]]"), "o(i(e))");
  c.expect(oracle::nat_of_hfs(five) == 5, "o(i(e)) value");
  const Hfs next = succ(five);
  c.expect(next == from_constructor_text("S [S [S []],S [S [S []]]]"), "s(o(i(e)))");
  c.expect(oracle::nat_of_hfs(next) == 6, "s(o(i(e))) value");
  c.expect(view<Hfs>(pred(view<Peano>(next))) == five, "back through peano");
  const BitStack nine = succ(BitStack::empty().push_bit0().push_bit0().push_bit1());
  std::ostringstream os;
  os << nine;
  c.expect(os.str() == "Bit0 (Bit1 (Bit0 Empty))", "bitstack s(8)");
  return c.outcome("add, multiply, pow and digit transcripts reproduced exactly");
}

template <Polymath N>
void ordinals_for(Check& c, const char* name) {
  const std::vector<std::uint64_t> expected{0, 1, 3, 11, 2059};
  for (std::uint64_t n = 0; n < expected.size(); ++n) {
    c.expect(w(nth_ordinal(from_word<N>(n))) == expected[n],
             std::string(name) + " ordinal " + std::to_string(n));
  }
  std::vector<std::uint64_t> elems;
  for (const N& e : decode_set(from_word<N>(2059))) elems.push_back(w(e));
  c.expect(elems == std::vector<std::uint64_t>{0, 1, 3, 11}, std::string(name) + " decode 2059");
}

Outcome ordinals() {
  Check c;
  ordinals_for<Peano>(c, "peano");
  ordinals_for<BitStack>(c, "bitstack");
  ordinals_for<Hfs>(c, "hfs");
  ordinals_for<BigNat>(c, "bignat");
  return c.outcome("[0,1,3,11,2059] and decode(2059) = [0,1,3,11] on all four");
}

template <Polymath N>
void powerset26_for(Check& c, const char* name) {
  const N base = encode_set(NatSeq<N>{from_word<N>(1), from_word<N>(3), from_word<N>(4)});
  c.expect(w(base) == 26, std::string(name) + " encode");
  const N p = powerset(base);
  c.expect(w(p) == 84215045, std::string(name) + " powerset");
  std::vector<std::vector<std::uint64_t>> subsets;
  for (const N& code : decode_set(p)) {
    std::vector<std::uint64_t> s;
    for (const N& e : decode_set(code)) s.push_back(w(e));
    subsets.push_back(s);
  }
  const std::vector<std::vector<std::uint64_t>> expected{
      {}, {1}, {3}, {1, 3}, {4}, {1, 4}, {3, 4}, {1, 3, 4}};
  c.expect(subsets == expected, std::string(name) + " subsets");
}

Outcome powersets() {
  Check c;
  powerset26_for<BitStack>(c, "bitstack");
  powerset26_for<Hfs>(c, "hfs");
  powerset26_for<BigNat>(c, "bignat");
  c.expect(generic::powerset(BigNat{26}) == BigNat{84215045}, "generic powerset");
  std::uint64_t compared = 0;
  for (std::uint64_t n = 0; n <= 4096; ++n) {
    const BigNat p = powerset(BigNat{n});
    const auto bits = oracle::brute_powerset_bits(n);
    bool same = p.popcount() == bits.size();
    for (std::size_t k = 0; same && k < bits.size(); ++k) same = p.test_bit(bits[k]);
    c.expect(same, "xor vs brute n=" + std::to_string(n));
    ++compared;
  }
  return c.outcome("26 -> 84215045 with 8 subsets; xor = brute force on " +
                   std::to_string(compared) + " inputs");
}

Outcome well_ordering() {
  Check c;
  std::vector<Hfs> it{Hfs::empty()};
  while (it.size() < 1000) it.push_back(succ(it.back()));
  std::uint64_t holds = 0;
  for (std::size_t k = 0; k + 1 < it.size(); ++k) {
    const bool ok = lt(it[k], it[k + 1]);
    holds += ok;
    c.expect(ok, "k=" + std::to_string(k));
  }
  return c.outcome(std::to_string(holds) + " of 999 comparisons true");
}

Outcome cross_instance() {
  selftest::Report report;
  const auto tables = std::make_tuple(
      selftest::build_table<Peano>(128), selftest::build_table<BitStack>(128),
      selftest::build_table<Hfs>(128), selftest::build_table<BigNat>(128));
  std::apply([&](const auto&... ta) { (selftest::cross_check_from(report, ta, tables), ...); },
             tables);
  if (report.ok()) return {true, "12 ordered pairs, 13 operation groups, 0..128 (peano 0..64)"};
  std::ostringstream os;
  report.print(os);
  return {false, os.str()};
}

/// Every arithmetic, order and set operation against the word oracle.
template <Polymath N>
void oracle_pair(Check& c, const N& a, const N& b, std::uint64_t x, std::uint64_t y) {
  const std::string at = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  c.expect(w(add(a, b)) == oracle::add(x, y), "add " + at);
  if (x >= y) c.expect(w(subtract(a, b)) == oracle::subtract(x, y), "subtract " + at);
  c.expect(w(multiply(a, b)) == oracle::multiply(x, y), "multiply " + at);
  c.expect(compare(a, b) == oracle::compare(x, y), "compare " + at);
  c.expect(w(set_union(a, b)) == oracle::set_union(x, y), "union " + at);
  c.expect(w(set_intersection(a, b)) == oracle::set_intersection(x, y), "inter " + at);
  c.expect(w(set_difference(a, b)) == oracle::set_difference(x, y), "diff " + at);
  c.expect(set_subset(a, b) == oracle::set_subset(x, y), "subset " + at);
  // Membership builds 2^x; unary values stay at or below 4096.
  if (!std::is_same_v<N, Peano> || x <= 12) {
    c.expect(in_set(a, b) == oracle::in_set(x, y), "in " + at);
  }
}

template <Polymath N>
void oracle_unary(Check& c, const N& a, std::uint64_t x) {
  const std::string at = "x=" + std::to_string(x);
  c.expect(w(succ(a)) == x + 1, "succ " + at);
  if (x > 0) c.expect(w(pred(a)) == x - 1, "pred " + at);
  c.expect(w(twice(a)) == oracle::twice(x), "double " + at);
  c.expect(w(half(a)) == oracle::half(x), "half " + at);
  if (x < 64) {
    c.expect(w(exp2(a)) == oracle::exp2(x), "exp2 " + at);
    c.expect(w(augment_set(a)) == oracle::augment_set(x), "augment " + at);
  }
}

template <Polymath N>
std::uint64_t sampled_oracle_agreement(Check& c, std::uint64_t range, std::uint64_t samples) {
  std::vector<N> vals;
  for (std::uint64_t v = 0; v <= range; ++v) vals.push_back(from_word<N>(v));
  for (std::uint64_t x = 0; x <= range; ++x) oracle_unary(c, vals[x], x);
  for (std::uint64_t x = 0; x <= 12; ++x) {
    for (std::uint64_t y = 0; y <= 12; ++y) {
      c.expect(w(pow(vals[x], vals[y])) == oracle::pow(x, y),
               "pow (" + std::to_string(x) + "," + std::to_string(y) + ")");
    }
  }
  std::mt19937_64 gen(20240611);
  std::uniform_int_distribution<std::uint64_t> pick(0, range);
  for (std::uint64_t k = 0; k < samples; ++k) {
    const std::uint64_t x = pick(gen);
    const std::uint64_t y = pick(gen);
    oracle_pair(c, vals[x], vals[y], x, y);
  }
  return samples;
}

Outcome oracle_agreement() {
  Check c;
  std::uint64_t pairs = 0;
  pairs += sampled_oracle_agreement<BigNat>(c, 1024, 100000);
  pairs += sampled_oracle_agreement<BitStack>(c, 1024, 100000);
  pairs += sampled_oracle_agreement<Hfs>(c, 1024, 100000);
  std::vector<Peano> vals;
  for (std::uint64_t v = 0; v <= 64; ++v) vals.push_back(Peano::from_depth(v));
  for (std::uint64_t x = 0; x <= 64; ++x) {
    if (x <= 12) oracle_unary(c, vals[x], x);
    for (std::uint64_t y = 0; y <= 64; ++y) {
      oracle_pair(c, vals[x], vals[y], x, y);
      ++pairs;
    }
  }
  return c.outcome(std::to_string(pairs) + " pairs (1e5 sampled each on 0..1024 for bignat, " +
                   "bitstack, hfs; peano exhaustive on 0..64), " + std::to_string(c.checks()) +
                   " checks");
}

Outcome ackermann() {
  Check c;
  for (std::uint64_t n = 0; n <= 4096; ++n) {
    const std::string at = "n=" + std::to_string(n);
    const Hfs t = oracle::hfs_of_nat(n);
    c.expect(oracle::nat_of_hfs(t) == n, "round trip " + at);
    c.expect(view<Hfs>(BigNat{n}) == t, "bignat view " + at);
    c.expect(view<Hfs>(from_word<BitStack>(n)) == t, "bitstack view " + at);
    c.expect(view<BigNat>(t) == BigNat{n}, "view to bignat " + at);
    c.expect(from_word<Hfs>(n) == t, "from_word " + at);
  }
  return c.outcome("0..4096 round trip, views agree with the oracle codec");
}

Outcome tower_successor() {
  Check c;
  const Hfs chain = from_constructor_text("S [S [S [S [S [S [S [S [S [S []]]]]]]]]]");
  const Hfs next = succ(chain);
  c.expect(next == from_constructor_text("S [S [],S [S [S [S [S [S [S [S [S []]]]]]]]]]"),
           "printed form");
  c.expect(next.children().size() == 2 && next.children()[0].is_empty_set() &&
               next.children()[1] == chain.children()[0],
           "{empty, c} for input {c}");
  c.expect(next.node_count() == chain.node_count() + 1, "one node added");
  c.expect(!next.to_word().has_value(), "value is beyond any word");
  return c.outcome("nodes " + std::to_string(chain.node_count()) + " -> " +
                   std::to_string(next.node_count()));
}

Outcome hfs_succ_cost() {
  Check c;
  double worst = 0;
  for (std::uint64_t n = 0; n <= 2048; ++n) {
    const Hfs x = oracle::hfs_of_nat(n);
    instrumentation::hfs_visits = 0;
    const Hfs y = succ(x);
    const std::uint64_t visits = instrumentation::hfs_visits;
    const std::uint64_t size = x.node_count() + y.node_count();
    worst = std::max(worst, double(visits) / double(size));
    c.expect(visits <= 4 * size, "n=" + std::to_string(n));
  }
  std::ostringstream os;
  os << "worst visits/(nodes before + after) = " << std::setprecision(3) << worst
     << " over 0..2048 (bound 4)";
  return c.outcome(os.str());
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;  // 0 when the criterion has no time limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "bijective base-2 table", 1, bijective_table},
      {"AC2", "transcripts", 0, transcripts},
      {"AC3", "ordinals", 1, ordinals},
      {"AC4", "powerset", 30, powersets},
      {"AC5", "hfs well-ordering", 10, well_ordering},
      {"AC6", "cross-instance coherence", 60, cross_instance},
      {"AC7", "oracle agreement", 0, oracle_agreement},
      {"AC8", "ackermann bijection", 0, ackermann},
      {"AC9", "tower successor", 1, tower_successor},
      {"AC10", "hfs successor cost", 0, hfs_succ_cost},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = cr.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.limit_seconds > 0 && secs >= cr.limit_seconds) {
      out.pass = false;
      out.detail += " (time limit " + std::to_string(cr.limit_seconds) + " s exceeded)";
    }
    failed += !out.pass;
    std::cout << (out.pass ? "PASS " : "FAIL ") << cr.id << " " << cr.title << " ["
              << std::fixed << std::setprecision(3) << secs << " s";
    if (cr.limit_seconds > 0) std::cout << " < " << std::setprecision(0) << cr.limit_seconds << " s";
    std::cout << "] " << out.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
