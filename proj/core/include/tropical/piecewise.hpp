#pragma once

// Continuous piecewise-linear functions on R with finitely many breakpoints,
// stored exactly in canonical form. These are the tropical rational
// functions: roots and poles are the points where the slope jumps.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tropical/maxplus.hpp"
#include "tropical/rational.hpp"

namespace tropical {

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Canonical representation:
//  - breakpoint abscissae strictly increasing,
//  - the slope changes at every stored breakpoint,
//  - with no breakpoints the function is affine (left slope == right slope).
// Equality of canonical functions is structural equality.
class PiecewiseLinear {
 public:
  // The zero function.
  PiecewiseLinear() = default;

  static PiecewiseLinear affine(const Rational& slope, const Rational& intercept);
  static PiecewiseLinear constant(const Rational& value) { return affine(0, value); }
  static PiecewiseLinear identity() { return affine(1, 0); }

  // Builds from breakpoint samples; abscissae must be strictly increasing.
  // Collinear interior points are dropped.
  static PiecewiseLinear from_points(const Rational& left_slope, std::vector<Point> points,
                                     const Rational& right_slope);

  // Builds from a left slope and slope jumps (x, omega); repeated abscissae are
  // summed. The result passes through `through`.
  static PiecewiseLinear from_jumps(const Rational& left_slope,
                                    std::vector<std::pair<Rational, Rational>> jumps,
                                    const Point& through);

  const Rational& left_slope() const noexcept { return left_slope_; }
  const Rational& right_slope() const noexcept { return right_slope_; }
  std::span<const Point> breakpoints() const noexcept { return points_; }

  // First breakpoint, or (0, f(0)) for an affine function.
  Point anchor() const;

  Rational operator()(const Rational& x) const;

  // Slopes of the k+1 linear pieces, left to right.
  std::vector<Rational> piece_slopes() const;

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

 private:
  Rational left_slope_{0};
  Rational right_slope_{0};
  Rational value_at_zero_{0};
  std::vector<Point> points_;
};

enum class EventKind { Root, Pole };

struct RootPoleEvent {
  Rational location;
  Rational omega;
  EventKind kind;

  Rational multiplicity() const { return abs(omega); }
  friend bool operator==(const RootPoleEvent&, const RootPoleEvent&) = default;
};

struct TropicalTerm {
  Rational coefficient;
  Rational exponent;
  friend bool operator==(const TropicalTerm&, const TropicalTerm&) = default;
};

// a_0 (+) a_1 (.) t^{l_1} (+) ... with exponents strictly increasing.
class TermList {
 public:
  TermList() = default;
  explicit TermList(std::vector<TropicalTerm> terms);

  std::span<const TropicalTerm> terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  friend bool operator==(const TermList&, const TermList&) = default;

 private:
  std::vector<TropicalTerm> terms_;
};

Rational evaluate(const PiecewiseLinear& f, const Rational& x);

// Right slope minus left slope at x; zero away from breakpoints.
Rational omega(const PiecewiseLinear& f, const Rational& x);

// Breakpoints inside the closed interval [lo, hi], classified.
std::vector<RootPoleEvent> events(const PiecewiseLinear& f, const Rational& lo, const Rational& hi);
std::vector<RootPoleEvent> events(const PiecewiseLinear& f);

PiecewiseLinear tmax(const PiecewiseLinear& f, const PiecewiseLinear& g);
PiecewiseLinear tmin(const PiecewiseLinear& f, const PiecewiseLinear& g);
PiecewiseLinear tplus(const PiecewiseLinear& f, const PiecewiseLinear& g);
PiecewiseLinear tminus(const PiecewiseLinear& f, const PiecewiseLinear& g);
PiecewiseLinear negate(const PiecewiseLinear& f);
PiecewiseLinear scale(const PiecewiseLinear& f, const Rational& k);
PiecewiseLinear add_constant(const PiecewiseLinear& f, const Rational& c);

// Pointwise max of a nonempty family.
PiecewiseLinear tmax_all(std::span<const PiecewiseLinear> fs);
PiecewiseLinear tplus_all(std::span<const PiecewiseLinear> fs);

// shift(f, c)(x) = f(x + c).
PiecewiseLinear shift(const PiecewiseLinear& f, const Rational& c);

bool is_entire(const PiecewiseLinear& f);
bool is_tropical_unit(const PiecewiseLinear& f);

// inf / sup over R; nullopt when unbounded.
std::optional<Rational> infimum(const PiecewiseLinear& f);
std::optional<Rational> supremum(const PiecewiseLinear& f);

// f(x) <= g(x) for every real x.
bool less_equal_everywhere(const PiecewiseLinear& f, const PiecewiseLinear& g);

// Upper envelope of the lines coefficient + exponent * x; nonempty input.
PiecewiseLinear upper_envelope(std::span<const TropicalTerm> lines);

// (max of numerator terms) - (max of denominator terms).
PiecewiseLinear from_terms(const TermList& numerator, const TermList& denominator);

struct TermRepresentation {
  TermList numerator;
  TermList denominator;
  // f = from_terms(numerator, denominator) + unit_coefficient + unit_exponent * x
  Rational unit_coefficient;
  Rational unit_exponent;
};

// Rebuilds f from its roots and poles with free constants A0 and B0, returning
// the tropical unit that makes the round trip exact.
TermRepresentation to_terms(const PiecewiseLinear& f, const Rational& a0, const Rational& b0);

struct EntireDecomposition {
  PiecewiseLinear h;  // numerator
  PiecewiseLinear g;  // denominator, g(0) = 0
};

// f = h - g with h, g entire and without common roots.
EntireDecomposition entire_decomposition(const PiecewiseLinear& f);

// Entire u with omega_u = min(omega_f1, omega_f2) and u(0) = anchor_value.
// Throws NotEntire unless both inputs are entire.
PiecewiseLinear tropical_gcd(const PiecewiseLinear& f1, const PiecewiseLinear& f2,
                             const Rational& anchor_value);

// a (.) f, with the Bottom coefficient rejected.
PiecewiseLinear odot(const MaxPlus& a, const PiecewiseLinear& f);

// (+)_k a_k (.) f_k; nullopt when every coefficient is Bottom.
std::optional<PiecewiseLinear> linear_combination(std::span<const MaxPlus> coefficients,
                                                  std::span<const PiecewiseLinear> functions);

}  // namespace tropical
