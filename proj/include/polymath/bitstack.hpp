#pragma once

#include <cstddef>
#include <memory>
#include <ostream>
#include <vector>

#include "polymath/contract.hpp"
#include "polymath/errors.hpp"

namespace polymath {

/// Stack of bijective base-2 digits, least significant on top. Push and pop
/// are O(1); stacks share their tails.
class BitStack {
  struct Node {
    bool bit1;
    std::shared_ptr<Node> next;

    Node(bool b, std::shared_ptr<Node> n) : bit1(b), next(std::move(n)) {}
    Node(const Node&) = delete;
    Node& operator=(const Node&) = delete;

    ~Node() {
      std::shared_ptr<Node> tail = std::move(next);
      while (tail && tail.use_count() == 1) {
        std::shared_ptr<Node> after = std::move(tail->next);
        tail = std::move(after);
      }
    }
  };

 public:
  BitStack() = default;

  static BitStack empty() { return BitStack{}; }

  /// Digits top first, i.e. least significant first.
  static BitStack from_digits(const std::vector<int>& digits) {
    BitStack out;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
      out = *it ? out.push_bit1() : out.push_bit0();
    }
    return out;
  }

  bool is_empty() const noexcept { return top_ == nullptr; }

  bool top_is_bit0() const noexcept { return top_ && !top_->bit1; }
  bool top_is_bit1() const noexcept { return top_ && top_->bit1; }

  BitStack push_bit0() const {
    return BitStack{std::make_shared<Node>(false, top_)};
  }

  BitStack push_bit1() const {
    return BitStack{std::make_shared<Node>(true, top_)};
  }

  BitStack pop_bit() const {
    if (!top_) throw DomainError("pop_bit: empty bit stack");
    return BitStack{top_->next};
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (const Node* p = top_.get(); p; p = p->next.get()) ++n;
    return n;
  }

  std::vector<int> digits() const {
    std::vector<int> out;
    for (const Node* p = top_.get(); p; p = p->next.get()) {
      out.push_back(p->bit1 ? 1 : 0);
    }
    return out;
  }

  friend bool operator==(const BitStack& a, const BitStack& b) noexcept {
    const Node* p = a.top_.get();
    const Node* q = b.top_.get();
    while (p && q) {
      if (p == q) return true;
      if (p->bit1 != q->bit1) return false;
      p = p->next.get();
      q = q->next.get();
    }
    return p == q;
  }

  /// Constructor syntax, e.g. "Bit1 (Bit0 (Bit0 Empty))".
  friend std::ostream& operator<<(std::ostream& os, const BitStack& x) {
    std::size_t open = 0;
    for (const Node* p = x.top_.get(); p; p = p->next.get()) {
      os << (p->bit1 ? "Bit1 " : "Bit0 ");
      if (p->next) {
        os << '(';
        ++open;
      }
    }
    os << "Empty";
    for (; open > 0; --open) os << ')';
    return os;
  }

 private:
  explicit BitStack(std::shared_ptr<Node> top) : top_(std::move(top)) {}

  std::shared_ptr<Node> top_;
};

static_assert(Polymath<BitStack>);

}  // namespace polymath
