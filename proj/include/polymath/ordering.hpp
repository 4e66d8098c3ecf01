#pragma once

#include <ostream>
#include <string_view>

namespace polymath {

enum class Ordering3 { lt, eq, gt };

constexpr Ordering3 reversed(Ordering3 o) noexcept {
  switch (o) {
    case Ordering3::lt: return Ordering3::gt;
    case Ordering3::gt: return Ordering3::lt;
    default: return Ordering3::eq;
  }
}

constexpr std::string_view to_string(Ordering3 o) noexcept {
  switch (o) {
    case Ordering3::lt: return "LT";
    case Ordering3::gt: return "GT";
    default: return "EQ";
  }
}

inline std::ostream& operator<<(std::ostream& os, Ordering3 o) {
  return os << to_string(o);
}

}  // namespace polymath
