#pragma once

// The max-plus semiring R_max = R u {-inf}: oplus is max, odot is +.
// Bottom (-inf) is a separate state of the value, never a numeric sentinel.

#include <compare>
#include <optional>
#include <string>

#include "tropical/rational.hpp"

namespace tropical {

class MaxPlus {
 public:
  // Default-constructed value is Bottom, the additive zero.
  MaxPlus() = default;
  explicit MaxPlus(Rational value) : value_(std::move(value)) {}

  static MaxPlus bottom() { return MaxPlus(); }
  static MaxPlus unit() { return MaxPlus(Rational(0)); }
  static MaxPlus finite(const Rational& v) { return MaxPlus(v); }

  bool is_bottom() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  // Precondition: is_finite().
  const Rational& value() const;

  friend bool operator==(const MaxPlus& a, const MaxPlus& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const MaxPlus& a, const MaxPlus& b);

 private:
  std::optional<Rational> value_;
};

MaxPlus oplus(const MaxPlus& a, const MaxPlus& b);
MaxPlus odot(const MaxPlus& a, const MaxPlus& b);

// Throws DivisionByBottom when b is Bottom.
MaxPlus oslash(const MaxPlus& a, const MaxPlus& b);

// a^{odot k} = k * a. Throws BottomPower for Bottom raised to k <= 0.
MaxPlus opower(const MaxPlus& a, const Rational& k);

// "-inf" or an exact rational string.
std::string to_string(const MaxPlus& value);
MaxPlus parse_maxplus(std::string_view text);

}  // namespace tropical
