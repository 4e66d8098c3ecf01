#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polymath {

/// An operation was applied outside its domain, e.g. the predecessor of zero
/// or a subtraction whose result would be negative.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A set-building operation received the same element twice.
class DuplicateElementError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested value would exceed a configured magnitude guard.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position()` is a byte offset into the input.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace polymath
