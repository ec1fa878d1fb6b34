#include <gtest/gtest.h>

#include <cmath>

#include "support/random.hpp"
#include "tropical/error.hpp"
#include "tropical/nevanlinna.hpp"

using namespace tropical;
using tropical::testkit::abs_x;
using tropical::testkit::lines;

namespace {

// n(t) read off the raw slopes, integrated segment by segment between the
// sorted pole distances. Shares nothing with the library's pole sum.
Rational counting_oracle(const PiecewiseLinear& f, const Rational& r) {
  auto slopes = f.piece_slopes();
  std::vector<std::pair<Rational, Rational>> poles;  // (|s|, multiplicity)
  auto pts = f.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational jump = slopes[i + 1] - slopes[i];
    if (jump < 0) poles.emplace_back(abs(pts[i].x), -jump);
  }
  std::sort(poles.begin(), poles.end());
  Rational area = 0, level = 0, t = 0;
  for (const auto& [s, m] : poles) {
    if (s > r) break;
    area += level * (s - t);
    level += m;
    t = s;
  }
  area += level * (r - t);
  return area / 2;
}

// midpoint Riemann sum of n(t) on a uniform partition with `cells` cells
double counting_riemann(const PiecewiseLinear& f, const Rational& r, int cells) {
  double sum = 0;
  Rational h = r / cells;
  for (int i = 0; i < cells; ++i) {
    Rational mid = h * i + h / 2;
    sum += to_double(pole_count(f, mid));
  }
  return 0.5 * sum * to_double(h);
}

}  // namespace

TEST(Nevanlinna, PlusPart) {
  EXPECT_EQ(plus_part(PiecewiseLinear::identity()), lines({{0, 0}, {0, 1}}));
  EXPECT_EQ(plus_part(negate(abs_x())), PiecewiseLinear::constant(0));
  auto trap = plus_part(tplus(negate(abs_x()), PiecewiseLinear::constant(1)));
  ASSERT_EQ(trap.breakpoints().size(), 3u);
  EXPECT_EQ(trap.breakpoints()[0], (Point{-1, 0}));
  EXPECT_EQ(trap.breakpoints()[2], (Point{1, 0}));
}

TEST(Nevanlinna, Proximity) {
  auto relu = lines({{0, 0}, {0, 1}});
  EXPECT_EQ(proximity(relu, 4), 2);
  EXPECT_EQ(proximity(negate(abs_x()), 9), 0);
  EXPECT_EQ(proximity(PiecewiseLinear::constant(6), 1), 6);
  EXPECT_THROW(proximity(relu, -1), Error);
}

TEST(Nevanlinna, Counting) {
  EXPECT_EQ(counting(abs_x(), 10), 0);
  EXPECT_EQ(counting(negate(abs_x()), 5), 5);
  EXPECT_EQ(counting(negate(shift(abs_x(), -1)), 3), 2);
  EXPECT_EQ(counting(negate(shift(abs_x(), -1)), Rational(1, 2)), 0);
}

TEST(Nevanlinna, Characteristic) {
  auto relu = lines({{0, 0}, {0, 1}});
  for (long r : {0L, 1L, 3L, 10L}) {
    EXPECT_EQ(characteristic(relu, r).T, rational(r, 2));
    EXPECT_EQ(characteristic(negate(abs_x()), r).T, r);
    EXPECT_EQ(characteristic(PiecewiseLinear::constant(4), r).T, 4);
  }
}

TEST(Nevanlinna, CountingMatchesOracles) {
  testkit::Random rng(20);
  for (int t = 0; t < 200; ++t) {
    auto f = rng.function(6);
    Rational r = abs(rng.rational(8, 5));
    Rational n = counting(f, r);
    EXPECT_EQ(n, counting_oracle(f, r));
    if (r > 0 && t < 40) EXPECT_NEAR(to_double(n), counting_riemann(f, r, 4000), 0.05);
  }
}

TEST(Nevanlinna, Jensen) {
  EXPECT_EQ(jensen_residual(lines({{0, 0}, {0, 1}}), 7), 0);
  EXPECT_EQ(jensen_residual(negate(abs_x()), 2), 0);
  testkit::Random rng(21);
  for (int t = 0; t < 100; ++t) {
    auto f = rng.function();
    EXPECT_EQ(jensen_residual(f, abs(rng.rational(10, 3))), 0);
  }
}

TEST(Nevanlinna, ShiftProximity) {
  auto relu = lines({{0, 0}, {0, 1}});
  for (long r : {1L, 2L, 50L}) {
    EXPECT_EQ(shift_proximity(relu, 1, r), Rational(1, 2));
    EXPECT_EQ(shift_proximity(negate(abs_x()), 1, r), Rational(1, 2));
    // unit 3x: difference is the constant 3c
    EXPECT_EQ(shift_proximity(PiecewiseLinear::affine(3, 1), 2, r), 6);
    EXPECT_EQ(shift_proximity(PiecewiseLinear::affine(3, 1), -2, r), 0);
  }
}

TEST(Nevanlinna, Inequalities) {
  testkit::Random rng(22);
  for (int t = 0; t < 200; ++t) {
    auto f = rng.function(), g = rng.function();
    Rational r = abs(rng.rational(10, 3));
    EXPECT_LE(proximity(tmax(f, g), r), proximity(f, r) + proximity(g, r));
    EXPECT_LE(proximity(tplus(f, g), r), proximity(f, r) + proximity(g, r));
    EXPECT_LE(counting(tmax(f, g), r), counting(f, r) + counting(g, r));
    EXPECT_LE(counting(tplus(f, g), r), counting(f, r) + counting(g, r));
    EXPECT_LE(characteristic(tplus(f, g), r).T, characteristic(f, r).T + characteristic(g, r).T);
    EXPECT_LE(characteristic(tmax(f, g), r).T, characteristic(f, r).T + characteristic(g, r).T);
  }
}

TEST(Nevanlinna, SweepMonotone) {
  testkit::Random rng(23);
  std::vector<Rational> radii;
  for (long r = 0; r <= 40; r += 2) radii.emplace_back(r);
  for (int t = 0; t < 50; ++t) {
    auto f = rng.function();
    auto sweep = characteristic_sweep(f, radii);
    for (std::size_t i = 0; i < sweep.size(); ++i) {
      EXPECT_EQ(sweep[i].T, sweep[i].m + sweep[i].N);
      EXPECT_GE(sweep[i].m, 0);
      if (i) EXPECT_GE(sweep[i].N, sweep[i - 1].N);
    }
    bool constant = f.breakpoints().empty() && f.left_slope() == 0;
    if (!constant) EXPECT_GT(characteristic(f, 100000).T, characteristic(f, 100).T);
  }
}

TEST(Nevanlinna, HyperOrder) {
  std::vector<Rational> radii;
  for (int k = 4; k <= 20; ++k) radii.emplace_back(mpz_class(1) << k);
  auto relu = lines({{0, 0}, {0, 1}});
  EXPECT_LT(std::fabs(hyper_order_estimate(relu, radii).value), 0.05);
  EXPECT_LT(std::fabs(hyper_order_estimate(negate(abs_x()), radii).value), 0.05);
  auto est = hyper_order_estimate(relu, radii);
  EXPECT_EQ(est.sample_radii.size(), radii.size());
  EXPECT_GE(est.value, 0.0);
  try {
    hyper_order_estimate(PiecewiseLinear::constant(5), radii);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientSamples);
  }
  std::vector<Rational> few = {Rational(2), Rational(3)};
  EXPECT_THROW(hyper_order_estimate(relu, few), Error);
}
