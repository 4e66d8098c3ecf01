#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "polymath/contract.hpp"
#include "polymath/errors.hpp"
#include "polymath/ordering.hpp"

namespace polymath {

namespace instrumentation {

/// Nodes touched by Hfs::succ and Hfs::pred on this thread: one per call,
/// one per sibling examined, one per node inspected by the equality tests
/// inside the carry loop.
inline thread_local std::uint64_t hfs_visits = 0;

}  // namespace instrumentation

/// A hereditarily finite set as a rooted tree. Its natural-number reading is
/// the Ackermann encoding f(x) = sum over children c of 2^f(c).
///
/// Canonical form: children strictly ascending in that order (so pairwise
/// distinct). Every operation here preserves it, which makes structural
/// equality the same as set equality.
class Hfs {
 public:
  Hfs() = default;

  static Hfs empty() { return Hfs{}; }

  /// Wraps children that are already strictly ascending.
  static Hfs from_canonical_children(std::vector<Hfs> children) {
    if (children.empty()) return Hfs{};
    return Hfs{std::make_shared<const std::vector<Hfs>>(std::move(children))};
  }

  /// {x}
  static Hfs singleton(const Hfs& x) {
    std::vector<Hfs> one_child;
    one_child.push_back(x);
    return from_canonical_children(std::move(one_child));
  }

  std::span<const Hfs> children() const noexcept {
    if (!kids_) return {};
    return {kids_->data(), kids_->size()};
  }

  bool is_empty_set() const noexcept { return kids_ == nullptr; }

  /// Tree size, shared subtrees counted once per occurrence.
  std::size_t node_count() const noexcept {
    std::size_t n = 1;
    for (const auto& c : children()) n += c.node_count();
    return n;
  }

  // o_ (S (S [] : _)) = True
  bool top_is_bit0() const noexcept {
    return kids_ && kids_->front().is_empty_set();
  }

  // o (S xs) = s (S (map s xs))
  Hfs push_bit0() const {
    std::vector<Hfs> lifted;
    lifted.reserve(children().size());
    for (const auto& c : children()) lifted.push_back(c.succ());
    return from_canonical_children(std::move(lifted)).succ();
  }

  Hfs push_bit1() const { return push_bit0().succ(); }

  // r x = S (map p (drop leading empty (children of p x)))
  Hfs pop_bit() const {
    if (is_empty_set()) throw DomainError("pop_bit: the empty set has no digits");
    const Hfs predecessor = pred();
    auto ys = predecessor.children();
    if (!ys.empty() && ys.front().is_empty_set()) ys = ys.subspan(1);
    std::vector<Hfs> halved;
    halved.reserve(ys.size());
    for (const auto& y : ys) halved.push_back(y.pred());
    return from_canonical_children(std::move(halved));
  }

  /// Successor: insert the empty set, carrying by recursive succ on equal
  /// neighbours.
  //   hLift k [] = [k]; hLift k (x:xs) | k==x = hLift (s x) xs; hLift k xs = k:xs
  Hfs succ() const {
    ++instrumentation::hfs_visits;
    const auto xs = children();
    Hfs carry;
    std::size_t i = 0;
    while (i < xs.size()) {
      ++instrumentation::hfs_visits;
      if (!counted_equal(carry, xs[i])) break;
      carry = xs[i].succ();
      ++i;
    }
    std::vector<Hfs> out;
    out.reserve(xs.size() - i + 1);
    out.push_back(std::move(carry));
    out.insert(out.end(), xs.begin() + static_cast<std::ptrdiff_t>(i), xs.end());
    return from_canonical_children(std::move(out));
  }

  /// Predecessor: unfold the least element k into p k, p (p k), ..., down to
  /// the empty set, which is dropped.
  //   hUnLift (S [] : xs) = xs; hUnLift (k:xs) = hUnLift (k':k':xs) where k' = p k
  Hfs pred() const {
    if (is_empty_set()) throw DomainError("pred: zero has no predecessor");
    ++instrumentation::hfs_visits;
    const auto xs = children();
    std::vector<Hfs> unfolded;  // descending
    for (Hfs k = xs.front(); !k.is_empty_set();) {
      ++instrumentation::hfs_visits;
      k = k.pred();
      unfolded.push_back(k);
    }
    // Each k' is left behind once; its twin is unfolded further, and the
    // final empty set consumes one of the two copies.
    std::vector<Hfs> out(unfolded.rbegin(), unfolded.rend());
    out.insert(out.end(), xs.begin() + 1, xs.end());
    return from_canonical_children(std::move(out));
  }

  /// Ackermann value if it fits in 64 bits; never expands the tree.
  std::optional<std::uint64_t> to_word() const {
    std::uint64_t sum = 0;
    for (const auto& c : children()) {
      const auto e = c.to_word();
      if (!e || *e >= 64) return std::nullopt;
      sum += std::uint64_t{1} << *e;
    }
    return sum;
  }

  /// Bit width of the Ackermann value, if that width fits in 64 bits.
  std::optional<std::uint64_t> bit_width() const {
    if (is_empty_set()) return 0;
    const auto top = kids_->back().to_word();
    if (!top || *top == UINT64_MAX) return std::nullopt;
    return *top + 1;
  }

  /// Numeric order of the encoded values, read from the largest element
  /// down. Valid for canonical trees; used to normalize parsed input.
  static Ordering3 structural_compare(const Hfs& a, const Hfs& b) {
    const auto xs = a.children();
    const auto ys = b.children();
    std::size_t i = xs.size();
    std::size_t j = ys.size();
    while (i > 0 && j > 0) {
      --i;
      --j;
      const Ordering3 c = structural_compare(xs[i], ys[j]);
      if (c != Ordering3::eq) return c;
    }
    if (i > 0) return Ordering3::gt;
    if (j > 0) return Ordering3::lt;
    return Ordering3::eq;
  }

  /// Children strictly ascending at every level.
  bool is_canonical() const {
    const auto xs = children();
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (!xs[k].is_canonical()) return false;
      if (k > 0 && structural_compare(xs[k - 1], xs[k]) != Ordering3::lt) {
        return false;
      }
    }
    return true;
  }

  friend bool operator==(const Hfs& a, const Hfs& b) noexcept {
    if (a.kids_ == b.kids_) return true;
    const auto xs = a.children();
    const auto ys = b.children();
    if (xs.size() != ys.size()) return false;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (!(xs[k] == ys[k])) return false;
    }
    return true;
  }

  /// Brace notation: {} for the empty set, children in canonical order.
  friend std::ostream& operator<<(std::ostream& os, const Hfs& x) {
    os << '{';
    bool first = true;
    for (const auto& c : x.children()) {
      if (!first) os << ',';
      os << c;
      first = false;
    }
    return os << '}';
  }

 private:
  explicit Hfs(std::shared_ptr<const std::vector<Hfs>> kids)
      : kids_(std::move(kids)) {}

  static bool counted_equal(const Hfs& a, const Hfs& b) noexcept {
    ++instrumentation::hfs_visits;
    if (a.kids_ == b.kids_) return true;
    const auto xs = a.children();
    const auto ys = b.children();
    if (xs.size() != ys.size()) return false;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (!counted_equal(xs[k], ys[k])) return false;
    }
    return true;
  }

  std::shared_ptr<const std::vector<Hfs>> kids_;
};

static_assert(Polymath<Hfs>);

template <>
struct overrides<Hfs> {
  static Hfs succ(const Hfs& x) { return x.succ(); }
  static Hfs pred(const Hfs& x) { return x.pred(); }
  static bool is_zero(const Hfs& x) { return x.is_empty_set(); }
  static std::optional<std::uint64_t> to_word(const Hfs& x) {
    return x.to_word();
  }
};

}  // namespace polymath
