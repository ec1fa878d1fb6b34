#pragma once

// Tropical Nevanlinna functions of a piecewise-linear f:
//   m(r,f) = (f+(r) + f+(-r)) / 2,   f+ = max(0, f)
//   N(r,f) = 1/2 * integral_0^r n(t,f) dt, n counting poles with |s| <= t
//   T(r,f) = m(r,f) + N(r,f)
// Everything here is exact except the hyper-order estimate.

#include <span>
#include <vector>

#include "tropical/piecewise.hpp"

namespace tropical {

struct CharacteristicSample {
  Rational r;
  Rational m;
  Rational N;
  Rational T;
};

struct HyperOrderEstimate {
  double value = 0.0;  // NUMERIC, clamped to >= 0
  std::vector<Rational> sample_radii;
  double regression_residual = 0.0;  // RMS of the least-squares fit
};

PiecewiseLinear plus_part(const PiecewiseLinear& f);

// Throws InvalidArgument for r < 0 (all radius functions below).
Rational proximity(const PiecewiseLinear& f, const Rational& r);
Rational counting(const PiecewiseLinear& f, const Rational& r);

// Pole-multiplicity step function n(t, f).
Rational pole_count(const PiecewiseLinear& f, const Rational& t);

CharacteristicSample characteristic(const PiecewiseLinear& f, const Rational& r);
std::vector<CharacteristicSample> characteristic_sweep(const PiecewiseLinear& f,
                                                       std::span<const Rational> radii);

// T(r,f) - T(r, -f) - f(0); zero for every f and r.
Rational jensen_residual(const PiecewiseLinear& f, const Rational& r);

// m(r, f(x+c) - f(x)).
Rational shift_proximity(const PiecewiseLinear& f, const Rational& c, const Rational& r);

// Least-squares fit of log log T(r) = s*log r + b*log log r + k over the
// usable radii (r > 1, T > 1); s is reported. The log log r regressor absorbs
// finite-order growth, so T ~ C r^rho yields s ~ 0.
// Throws InsufficientSamples with fewer than 3 usable radii or constant T.
HyperOrderEstimate hyper_order_estimate(const PiecewiseLinear& f, std::span<const Rational> radii);

}  // namespace tropical
