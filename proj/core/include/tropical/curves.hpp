#pragma once

// Tropical holomorphic curves R -> TP^n given by reduced representations.

#include <cstddef>
#include <span>
#include <vector>

#include "tropical/error.hpp"
#include "tropical/maxplus.hpp"
#include "tropical/piecewise.hpp"

namespace tropical {

class CommonRootError : public Error {
 public:
  explicit CommonRootError(const Rational& location);
  const Rational& location() const noexcept { return location_; }

 private:
  Rational location_;
};

class TropicalCurve {
 public:
  // n+1 >= 2 entire coordinates without a root shared by all of them.
  // Throws InvalidArgument, NotEntire (with the index) or CommonRootError at
  // the leftmost shared root.
  static TropicalCurve validate_reduced(std::vector<PiecewiseLinear> coordinates);

  std::span<const PiecewiseLinear> coordinates() const noexcept { return coords_; }
  const PiecewiseLinear& operator[](std::size_t j) const { return coords_[j]; }
  // n, so that there are n+1 coordinates
  std::size_t dimension() const noexcept { return coords_.size() - 1; }

  // F = max g_j
  const PiecewiseLinear& envelope() const noexcept { return envelope_; }

  // max_j g_j(0) = F(0)
  Rational max_at_zero() const { return envelope_(Rational(0)); }

 private:
  TropicalCurve(std::vector<PiecewiseLinear> coords, PiecewiseLinear envelope)
      : coords_(std::move(coords)), envelope_(std::move(envelope)) {}

  std::vector<PiecewiseLinear> coords_;
  PiecewiseLinear envelope_;
};

inline TropicalCurve validate_reduced(std::vector<PiecewiseLinear> coordinates) {
  return TropicalCurve::validate_reduced(std::move(coordinates));
}

struct CartanSample {
  Rational r;
  Rational T;
};

// T(r) = (F(r) + F(-r))/2 - F(0). Throws InvalidArgument for r < 0.
CartanSample cartan_characteristic(const TropicalCurve& curve, const Rational& r);

// Adds alpha*x + beta to every coordinate.
TropicalCurve reanchor(const TropicalCurve& curve, const Rational& alpha, const Rational& beta);

// N(r, 1 (/) h): the counting function of the roots of h.
Rational root_counting(const PiecewiseLinear& h, const Rational& r);

// min of the two root counting functions. Throws NotEntire.
Rational nmin(const PiecewiseLinear& h1, const PiecewiseLinear& h2, const Rational& r);

// Root counting of u with omega_u = min(omega_h1, omega_h2), i.e. of the
// roots the two share. Never exceeds nmin. Throws NotEntire.
Rational common_root_counting(const PiecewiseLinear& h1, const PiecewiseLinear& h2, const Rational& r);

struct Lemma47Report {
  Rational r;
  Rational characteristic;  // T(r, fhat (/) ftilde)
  Rational nmin;
  Rational common_roots;  // N(r, 1 (/) u)
  Rational cartan;        // T_g(r)
  Rational C;             // largest finite coefficient
  Rational envelope_at_zero;
  Rational ftilde_at_zero;

  // T_g(r) + C + max g_j(0) - ftilde(0)
  Rational rhs() const { return cartan + C + envelope_at_zero - ftilde_at_zero; }
  // characteristic + nmin - rhs
  Rational residual() const { return characteristic + nmin - rhs(); }
  // same with the common-root count in place of nmin
  Rational common_root_residual() const { return characteristic + common_roots - rhs(); }
};

// fhat and ftilde are the combinations with coeffs1 and coeffs2. Throws
// DimensionMismatch, BadCoefficients when a combination is all Bottom, and
// InvalidArgument for r < 0.
Lemma47Report lemma47_report(const TropicalCurve& curve, std::span<const MaxPlus> coeffs1,
                             std::span<const MaxPlus> coeffs2, const Rational& r);

inline Rational lemma47_residual(const TropicalCurve& curve, std::span<const MaxPlus> coeffs1,
                                 std::span<const MaxPlus> coeffs2, const Rational& r) {
  return lemma47_report(curve, coeffs1, coeffs2, r).residual();
}

}  // namespace tropical
