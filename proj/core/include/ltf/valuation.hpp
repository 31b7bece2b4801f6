#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace ltf {

// v_pi of an element: a finite integer or +infinity (for zero).
class Valuation {
 public:
  constexpr Valuation(std::int64_t v) : v_(v), inf_(false) {}  // NOLINT: implicit on purpose
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return inf_; }
  constexpr bool is_finite() const { return !inf_; }
  std::int64_t value() const;

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.inf_ || b.inf_) return a.inf_ == b.inf_ ? std::strong_ordering::equal
                                 : (a.inf_ ? std::strong_ordering::greater : std::strong_ordering::less);
    return a.v_ <=> b.v_;
  }
  friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.inf_ || b.inf_) return infinity();
    return Valuation(a.v_ + b.v_);
  }

  std::string to_string() const { return inf_ ? std::string("inf") : std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

 private:
  constexpr Valuation() : v_(0), inf_(true) {}
  std::int64_t v_;
  bool inf_;
};

inline std::int64_t Valuation::value() const {
  if (inf_) throw std::logic_error("value() of infinite valuation");
  return v_;
}

}  // namespace ltf
