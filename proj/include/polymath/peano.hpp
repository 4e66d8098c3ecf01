#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "polymath/contract.hpp"
#include "polymath/errors.hpp"

namespace polymath {

/// Unary numeral: Zero, or Succ of another numeral. The slow reference
/// interpretation; every primitive walks the whole chain.
class Peano {
  struct Node {
    std::shared_ptr<Node> pred;

    explicit Node(std::shared_ptr<Node> p) : pred(std::move(p)) {}
    Node(const Node&) = delete;
    Node& operator=(const Node&) = delete;

    // Unlink uniquely owned tails one at a time; long chains would otherwise
    // recurse once per node in the shared_ptr destructors.
    ~Node() {
      std::shared_ptr<Node> next = std::move(pred);
      while (next && next.use_count() == 1) {
        std::shared_ptr<Node> after = std::move(next->pred);
        next = std::move(after);
      }
    }
  };

 public:
  Peano() = default;

  static Peano empty() { return Peano{}; }
  static Peano zero() { return Peano{}; }

  static Peano succ_of(const Peano& x) {
    return Peano{std::make_shared<Node>(x.head_)};
  }

  /// n-fold Succ of Zero.
  static Peano from_depth(std::size_t n) {
    Peano out;
    for (std::size_t k = 0; k < n; ++k) out = succ_of(out);
    return out;
  }

  bool is_zero() const noexcept { return head_ == nullptr; }

  /// Pattern match on Succ; DomainError on Zero.
  Peano inner() const {
    if (!head_) throw DomainError("Peano: Zero has no inner numeral");
    return Peano{head_->pred};
  }

  std::size_t depth() const noexcept {
    std::size_t n = 0;
    for (const Node* p = head_.get(); p; p = p->pred.get()) ++n;
    return n;
  }

  // o_ Zero = False;  o_ (Succ x) = not (o_ x)
  bool top_is_bit0() const noexcept {
    bool odd = false;
    for (const Node* p = head_.get(); p; p = p->pred.get()) odd = !odd;
    return odd;
  }

  // o x = Succ (o' x), where o' doubles every Succ
  Peano push_bit0() const {
    Peano doubled;
    for (const Node* p = head_.get(); p; p = p->pred.get()) {
      doubled = succ_of(succ_of(doubled));
    }
    return succ_of(doubled);
  }

  // i x = Succ (o x)
  Peano push_bit1() const { return succ_of(push_bit0()); }

  // r (Succ Zero) = Zero;  r (Succ (Succ Zero)) = Zero;
  // r (Succ (Succ x)) = Succ (r x)
  Peano pop_bit() const {
    if (!head_) throw DomainError("pop_bit: zero has no digits");
    std::size_t stripped = 0;
    const Node* p = head_.get();
    while (p->pred && p->pred->pred) {
      p = p->pred->pred.get();
      ++stripped;
    }
    return from_depth(stripped);
  }

  friend bool operator==(const Peano& a, const Peano& b) noexcept {
    const Node* p = a.head_.get();
    const Node* q = b.head_.get();
    while (p && q) {
      if (p == q) return true;
      p = p->pred.get();
      q = q->pred.get();
    }
    return p == q;
  }

  friend std::ostream& operator<<(std::ostream& os, const Peano& x) {
    const std::size_t n = x.depth();
    for (std::size_t k = 0; k < n; ++k) os << (k + 1 < n ? "Succ (" : "Succ ");
    os << "Zero";
    for (std::size_t k = 1; k < n; ++k) os << ')';
    return os;
  }

 private:
  explicit Peano(std::shared_ptr<Node> head) : head_(std::move(head)) {}

  std::shared_ptr<Node> head_;
};

static_assert(Polymath<Peano>);

template <>
struct overrides<Peano> {
  static std::optional<std::uint64_t> to_word(const Peano& x) {
    return x.depth();
  }
};

}  // namespace polymath
