#include "tropical/curves.hpp"

#include <string>

#include "tropical/nevanlinna.hpp"

namespace tropical {

CommonRootError::CommonRootError(const Rational& location)
    : Error(ErrorCode::CommonRoot, "coordinates share a root at " + to_string(location)),
      location_(location) {}

TropicalCurve TropicalCurve::validate_reduced(std::vector<PiecewiseLinear> coordinates) {
  if (coordinates.size() < 2) throw Error(ErrorCode::InvalidArgument, "a curve needs at least two coordinates");
  for (std::size_t j = 0; j < coordinates.size(); ++j) {
    if (!is_entire(coordinates[j])) {
      throw Error(ErrorCode::NotEntire, "coordinate " + std::to_string(j) + " is not entire", j);
    }
  }
  // A shared root is in particular a breakpoint of g_0.
  for (const Point& p : coordinates.front().breakpoints()) {
    bool shared = true;
    for (std::size_t j = 1; j < coordinates.size() && shared; ++j) shared = omega(coordinates[j], p.x) > 0;
    if (shared) throw CommonRootError(p.x);
  }
  PiecewiseLinear envelope = tmax_all(coordinates);
  return TropicalCurve(std::move(coordinates), std::move(envelope));
}

CartanSample cartan_characteristic(const TropicalCurve& curve, const Rational& r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
  const PiecewiseLinear& F = curve.envelope();
  Rational neg_r = -r;
  return {r, (F(r) + F(neg_r)) / 2 - F(Rational(0))};
}

TropicalCurve reanchor(const TropicalCurve& curve, const Rational& alpha, const Rational& beta) {
  const PiecewiseLinear unit = PiecewiseLinear::affine(alpha, beta);
  std::vector<PiecewiseLinear> coords;
  coords.reserve(curve.coordinates().size());
  for (const auto& g : curve.coordinates()) coords.push_back(tplus(g, unit));
  return TropicalCurve::validate_reduced(std::move(coords));
}

Rational root_counting(const PiecewiseLinear& h, const Rational& r) { return counting(negate(h), r); }

namespace {

void require_entire(const PiecewiseLinear& h1, const PiecewiseLinear& h2) {
  if (!is_entire(h1)) throw Error(ErrorCode::NotEntire, "first function is not entire", 0);
  if (!is_entire(h2)) throw Error(ErrorCode::NotEntire, "second function is not entire", 1);
}

}  // namespace

Rational nmin(const PiecewiseLinear& h1, const PiecewiseLinear& h2, const Rational& r) {
  require_entire(h1, h2);
  Rational a = root_counting(h1, r);
  Rational b = root_counting(h2, r);
  return a < b ? a : b;
}

Rational common_root_counting(const PiecewiseLinear& h1, const PiecewiseLinear& h2, const Rational& r) {
  require_entire(h1, h2);
  return root_counting(tropical_gcd(h1, h2, Rational(0)), r);
}

Lemma47Report lemma47_report(const TropicalCurve& curve, std::span<const MaxPlus> coeffs1,
                             std::span<const MaxPlus> coeffs2, const Rational& r) {
  const auto coords = curve.coordinates();
  if (coeffs1.size() != coords.size() || coeffs2.size() != coords.size()) {
    throw Error(ErrorCode::DimensionMismatch, "need one coefficient per coordinate");
  }
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
  auto fhat = linear_combination(coeffs1, coords);
  auto ftilde = linear_combination(coeffs2, coords);
  if (!fhat) throw Error(ErrorCode::BadCoefficients, "first combination has only Bottom coefficients", 0);
  if (!ftilde) throw Error(ErrorCode::BadCoefficients, "second combination has only Bottom coefficients", 1);

  std::optional<Rational> c;
  for (const auto* coeffs : {&coeffs1, &coeffs2}) {
    for (const auto& a : *coeffs) {
      if (a.is_finite() && (!c || a.value() > *c)) c = a.value();
    }
  }

  Lemma47Report report;
  report.r = r;
  report.characteristic = characteristic(tminus(*fhat, *ftilde), r).T;
  report.nmin = nmin(*fhat, *ftilde, r);
  report.common_roots = common_root_counting(*fhat, *ftilde, r);
  report.cartan = cartan_characteristic(curve, r).T;
  report.C = *c;
  report.envelope_at_zero = curve.max_at_zero();
  report.ftilde_at_zero = (*ftilde)(Rational(0));
  return report;
}

}  // namespace tropical
