#pragma once

// Timing scenarios behind `polymath bench`. Scenarios run one after another
// on the calling thread.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "polymath/oracle.hpp"
#include "polymath/polymath.hpp"

namespace polymath::bench {

struct Row {
  std::string repr;
  std::optional<double> millis;  // empty when skipped
  std::string note;
};

inline void print_table(std::ostream& os, std::string_view title, const std::vector<Row>& rows) {
  os << "scenario: " << title << '\n';
  os << std::left << std::setw(10) << "repr" << std::right << std::setw(12) << "time_ms"
     << "  note\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(10) << r.repr << std::right << std::setw(12);
    if (r.millis) {
      os << std::fixed << std::setprecision(3) << *r.millis;
    } else {
      os << "-";
    }
    os << "  " << r.note << '\n';
  }
}

template <class F>
double time_ms(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

template <class N>
Row succ_chain(std::string_view name, std::uint64_t steps) {
  N x = N::empty();
  const double ms = time_ms([&] {
    for (std::uint64_t k = 0; k < steps; ++k) x = succ(x);
  });
  const bool ok = to_word(x) == steps;
  return {std::string(name), ms, ok ? "value ok" : "WRONG VALUE"};
}

/// x+y and x*y for every pair in 0..range, each checked against the oracle.
template <class N>
Row add_mul_grid(std::string_view name, std::uint64_t range) {
  std::vector<N> vals;
  for (std::uint64_t v = 0; v <= range; ++v) vals.push_back(from_word<N>(v));
  std::uint64_t mismatches = 0;
  const double ms = time_ms([&] {
    for (std::uint64_t x = 0; x <= range; ++x) {
      for (std::uint64_t y = 0; y <= range; ++y) {
        if (to_word(add(vals[x], vals[y])) != x + y) ++mismatches;
        if (to_word(multiply(vals[x], vals[y])) != x * y) ++mismatches;
      }
    }
  });
  std::string note = "grid 0.." + std::to_string(range) + ", ";
  note += mismatches == 0 ? "all results agree"
                          : std::to_string(mismatches) + " MISMATCHES";
  return {std::string(name), ms, note};
}

/// {{...{}...}} with `depth` levels below the root: the tower 2^2^...^0.
inline Hfs singleton_chain(unsigned depth) {
  Hfs t;
  for (unsigned k = 0; k < depth; ++k) t = Hfs::singleton(t);
  return t;
}

/// Runs a named scenario. Returns false for an unknown name.
inline bool run(std::string_view scenario, std::ostream& os) {
  std::vector<Row> rows;
  if (scenario == "succ-chain") {
    constexpr std::uint64_t kSteps = 10000;
    rows.push_back(succ_chain<Peano>("peano", kSteps));
    rows.push_back(succ_chain<BitStack>("bitstack", kSteps));
    rows.push_back(succ_chain<Hfs>("hfs", kSteps));
    rows.push_back(succ_chain<BigNat>("bignat", kSteps));
    print_table(os, "succ-chain (10000 successors from zero)", rows);
    return true;
  }
  if (scenario == "add-mul-grid") {
    rows.push_back(add_mul_grid<Peano>("peano", 64));
    rows.push_back(add_mul_grid<BitStack>("bitstack", 128));
    rows.push_back(add_mul_grid<Hfs>("hfs", 128));
    rows.push_back(add_mul_grid<BigNat>("bignat", 128));
    print_table(os, "add-mul-grid (x+y and x*y, checked against machine words)", rows);
    return true;
  }
  if (scenario == "tower-succ") {
    const Hfs tower = singleton_chain(10);
    Hfs next;
    const double ms = time_ms([&] { next = succ(tower); });
    const bool shape = next.children().size() == 2 && next.children()[0].is_empty_set() &&
                       next.children()[1] == tower.children()[0];
    rows.push_back({"hfs", ms,
                    "nodes " + std::to_string(tower.node_count()) + " -> " +
                        std::to_string(next.node_count()) +
                        (shape ? ", result {{},c} for input {c}" : ", UNEXPECTED SHAPE")});
    for (const char* name : {"peano", "bitstack", "bignat"}) {
      rows.push_back({name, std::nullopt,
                      "skipped: magnitude guard (value is a tower of 2s, not materializable)"});
    }
    print_table(os, "tower-succ (successor of the depth-9 singleton chain)", rows);
    return true;
  }
  return false;
}

}  // namespace polymath::bench
