#include "tropical/maxplus.hpp"

#include "tropical/error.hpp"

namespace tropical {

const Rational& MaxPlus::value() const {
  if (!value_) throw Error(ErrorCode::InvalidArgument, "value() called on Bottom");
  return *value_;
}

std::strong_ordering operator<=>(const MaxPlus& a, const MaxPlus& b) {
  if (a.is_bottom() || b.is_bottom()) {
    return a.is_finite() <=> b.is_finite();
  }
  int c = cmp(*a.value_, *b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

MaxPlus oplus(const MaxPlus& a, const MaxPlus& b) { return a < b ? b : a; }

MaxPlus odot(const MaxPlus& a, const MaxPlus& b) {
  if (a.is_bottom() || b.is_bottom()) return MaxPlus::bottom();
  return MaxPlus(Rational(a.value() + b.value()));
}

MaxPlus oslash(const MaxPlus& a, const MaxPlus& b) {
  if (b.is_bottom()) throw Error(ErrorCode::DivisionByBottom, "tropical division by Bottom");
  if (a.is_bottom()) return MaxPlus::bottom();
  return MaxPlus(Rational(a.value() - b.value()));
}

MaxPlus opower(const MaxPlus& a, const Rational& k) {
  if (a.is_bottom()) {
    if (k <= 0) throw Error(ErrorCode::BottomPower, "Bottom raised to a non-positive power");
    return MaxPlus::bottom();
  }
  return MaxPlus(Rational(k * a.value()));
}

std::string to_string(const MaxPlus& value) {
  return value.is_bottom() ? std::string("-inf") : to_string(value.value());
}

MaxPlus parse_maxplus(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (s == "-inf" || s == "bottom") return MaxPlus::bottom();
  return MaxPlus(parse_rational(s));
}

}  // namespace tropical
