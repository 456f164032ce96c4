#pragma once

#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace flownet {

/// A nonnegative integer extended with a symbolic +infinity.
///
/// Used for every capacity, cost, and cut weight in the library. The
/// arithmetic follows the usual conventions: inf + x == inf, inf > x for
/// every finite x, inf == inf. Subtracting inf from inf is a programming
/// error and throws.
class ExtNat {
 public:
  constexpr ExtNat() : value_(0) {}
  constexpr ExtNat(std::uint64_t value) : value_(value) {  // NOLINT(runtime/explicit)
    if (value == kInfSentinel) throw std::overflow_error("ExtNat: finite value too large");
  }

  static constexpr ExtNat infinity() {
    ExtNat x;
    x.value_ = kInfSentinel;
    return x;
  }

  constexpr bool is_infinite() const { return value_ == kInfSentinel; }
  constexpr bool is_finite() const { return value_ != kInfSentinel; }

  /// The finite value; throws on infinity.
  constexpr std::uint64_t value() const {
    if (is_infinite()) throw std::logic_error("ExtNat: value() on infinity");
    return value_;
  }

  friend constexpr bool operator==(ExtNat a, ExtNat b) { return a.value_ == b.value_; }
  friend constexpr bool operator!=(ExtNat a, ExtNat b) { return a.value_ != b.value_; }
  friend constexpr bool operator<(ExtNat a, ExtNat b) { return a.value_ < b.value_; }
  friend constexpr bool operator<=(ExtNat a, ExtNat b) { return a.value_ <= b.value_; }
  friend constexpr bool operator>(ExtNat a, ExtNat b) { return a.value_ > b.value_; }
  friend constexpr bool operator>=(ExtNat a, ExtNat b) { return a.value_ >= b.value_; }

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    if (a.value_ > kInfSentinel - 1 - b.value_)
      throw std::overflow_error("ExtNat: addition overflow");
    return ExtNat(a.value_ + b.value_);
  }

  ExtNat& operator+=(ExtNat b) { return *this = *this + b; }

  /// Saturating-free subtraction: finite - finite must not go negative,
  /// inf - finite == inf, and inf - inf is never a legal evaluation.
  friend constexpr ExtNat operator-(ExtNat a, ExtNat b) {
    if (b.is_infinite()) throw std::logic_error("ExtNat: inf - inf (or x - inf) evaluated");
    if (a.is_infinite()) return infinity();
    if (a.value_ < b.value_) throw std::logic_error("ExtNat: negative subtraction result");
    return ExtNat(a.value_ - b.value_);
  }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(value_); }

  friend std::ostream& operator<<(std::ostream& os, ExtNat x) { return os << x.str(); }

 private:
  static constexpr std::uint64_t kInfSentinel = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t value_;
};

}  // namespace flownet
