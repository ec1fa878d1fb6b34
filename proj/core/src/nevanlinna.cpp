#include "tropical/nevanlinna.hpp"

#include <cmath>

#include "tropical/error.hpp"

namespace tropical {

namespace {

void require_radius(const Rational& r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
}

Rational positive_part(const Rational& v) { return v > 0 ? v : Rational(0); }

}  // namespace

PiecewiseLinear plus_part(const PiecewiseLinear& f) { return tmax(f, PiecewiseLinear::constant(0)); }

Rational proximity(const PiecewiseLinear& f, const Rational& r) {
  require_radius(r);
  Rational neg_r = -r;
  return (positive_part(f(r)) + positive_part(f(neg_r))) / 2;
}

Rational pole_count(const PiecewiseLinear& f, const Rational& t) {
  Rational n = 0;
  for (const auto& e : events(f)) {
    if (e.kind == EventKind::Pole && abs(e.location) <= t) n += e.multiplicity();
  }
  return n;
}

Rational counting(const PiecewiseLinear& f, const Rational& r) {
  require_radius(r);
  // each pole s with |s| <= r contributes |omega| * (r - |s|) to the integral
  Rational total = 0;
  for (const auto& e : events(f)) {
    if (e.kind != EventKind::Pole) continue;
    Rational s = abs(e.location);
    if (s <= r) total += e.multiplicity() * (r - s);
  }
  return total / 2;
}

CharacteristicSample characteristic(const PiecewiseLinear& f, const Rational& r) {
  CharacteristicSample s{r, proximity(f, r), counting(f, r), 0};
  s.T = s.m + s.N;
  return s;
}

std::vector<CharacteristicSample> characteristic_sweep(const PiecewiseLinear& f,
                                                       std::span<const Rational> radii) {
  std::vector<CharacteristicSample> out;
  out.reserve(radii.size());
  for (const auto& r : radii) out.push_back(characteristic(f, r));
  return out;
}

Rational jensen_residual(const PiecewiseLinear& f, const Rational& r) {
  return characteristic(f, r).T - characteristic(negate(f), r).T - f(Rational(0));
}

Rational shift_proximity(const PiecewiseLinear& f, const Rational& c, const Rational& r) {
  return proximity(tminus(shift(f, c), f), r);
}

HyperOrderEstimate hyper_order_estimate(const PiecewiseLinear& f, std::span<const Rational> radii) {
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i - 1] < radii[i])) {
      throw Error(ErrorCode::InvalidArgument, "radii must be strictly increasing", i);
    }
  }
  HyperOrderEstimate est;
  std::vector<double> xs, ls, ys;
  std::vector<Rational> ts;
  for (const auto& r : radii) {
    if (r <= 1) continue;
    Rational t = characteristic(f, r).T;
    if (t <= 1) continue;
    double log_r = std::log(to_double(r));
    xs.push_back(log_r);
    ls.push_back(std::log(log_r));
    ys.push_back(std::log(std::log(to_double(t))));
    ts.push_back(t);
    est.sample_radii.push_back(r);
  }
  bool constant_t = true;
  for (const auto& t : ts) constant_t = constant_t && t == ts.front();
  if (xs.size() < 3 || constant_t) {
    throw Error(ErrorCode::InsufficientSamples,
                "hyper-order needs at least 3 radii with r > 1 and T > 1, and nonconstant T");
  }

  // normal equations for y = s*x + b*l + k
  const std::size_t n = xs.size();
  double a[3][4] = {};
  for (std::size_t i = 0; i < n; ++i) {
    const double row[3] = {xs[i], ls[i], 1.0};
    for (int p = 0; p < 3; ++p) {
      for (int q = 0; q < 3; ++q) a[p][q] += row[p] * row[q];
      a[p][3] += row[p] * ys[i];
    }
  }
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
    }
    for (int k = 0; k < 4; ++k) std::swap(a[col][k], a[pivot][k]);
    if (std::fabs(a[col][col]) < 1e-300) {
      throw Error(ErrorCode::InsufficientSamples, "degenerate regression design");
    }
    for (int row = 0; row < 3; ++row) {
      if (row == col) continue;
      double factor = a[row][col] / a[col][col];
      for (int k = col; k < 4; ++k) a[row][k] -= factor * a[col][k];
    }
  }
  const double s = a[0][3] / a[0][0];
  const double b = a[1][3] / a[1][1];
  const double k = a[2][3] / a[2][2];

  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double e = ys[i] - (s * xs[i] + b * ls[i] + k);
    sq += e * e;
  }
  est.value = s > 0.0 ? s : 0.0;
  est.regression_residual = std::sqrt(sq / static_cast<double>(n));
  return est;
}

}  // namespace tropical
