#include <gtest/gtest.h>

#include "support/random.hpp"
#include "tropical/curves.hpp"
#include "tropical/nevanlinna.hpp"

using namespace tropical;
using tropical::testkit::lines;

namespace {

const MaxPlus B = MaxPlus::bottom();
MaxPlus v(const Rational& p) { return MaxPlus(p); }

PiecewiseLinear relu() { return lines({{0, 0}, {0, 1}}); }

TropicalCurve zero_x() {
  return TropicalCurve::validate_reduced({PiecewiseLinear::constant(0), PiecewiseLinear::identity()});
}

// entire coordinates; retried until no shared root
TropicalCurve random_curve(testkit::Random& rng, std::size_t n) {
  for (;;) {
    std::vector<PiecewiseLinear> cs;
    for (std::size_t j = 0; j <= n; ++j) cs.push_back(rng.entire(3));
    try {
      return TropicalCurve::validate_reduced(std::move(cs));
    } catch (const CommonRootError&) {
    }
  }
}

}  // namespace

TEST(Curves, Validate) {
  EXPECT_NO_THROW(zero_x());
  try {
    TropicalCurve::validate_reduced({relu(), lines({{0, 0}, {0, 2}})});
    FAIL();
  } catch (const CommonRootError& e) {
    EXPECT_EQ(e.code(), ErrorCode::CommonRoot);
    EXPECT_EQ(e.location(), 0);
  }
  try {
    TropicalCurve::validate_reduced({negate(lines({{0, 1}, {0, -1}})), relu()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotEntire);
    EXPECT_EQ(e.index(), std::optional<std::size_t>(0));
  }
  EXPECT_THROW(TropicalCurve::validate_reduced({relu()}), Error);
  // three coordinates with pairwise but not total shared roots
  EXPECT_NO_THROW(TropicalCurve::validate_reduced({relu(), relu(), PiecewiseLinear::identity()}));
}

TEST(Curves, Cartan) {
  auto c = zero_x();
  for (long r : {0L, 1L, 6L, 11L}) EXPECT_EQ(cartan_characteristic(c, r).T, rational(r, 2));
  EXPECT_THROW(cartan_characteristic(c, -1), Error);

  // (max(x, -2x), c): the envelope is max(x, -2x, c)
  auto g = lines({{0, 1}, {0, -2}});
  for (long cshift : {-3L, 2L}) {
    auto curve = TropicalCurve::validate_reduced({g, PiecewiseLinear::constant(cshift)});
    auto env = [&](const Rational& x) { return std::max(g(x), Rational(cshift)); };
    for (long r : {1L, 4L}) {
      Rational neg_r(-r);
      EXPECT_EQ(cartan_characteristic(curve, r).T, (env(Rational(r)) + env(neg_r)) / 2 - env(Rational(0)));
    }
  }
}

TEST(Curves, Reanchor) {
  auto c = zero_x();
  auto same = reanchor(c, 0, 0);
  EXPECT_TRUE(std::equal(same.coordinates().begin(), same.coordinates().end(), c.coordinates().begin()));
  auto moved = reanchor(c, 1, 2);
  EXPECT_EQ(moved[0], PiecewiseLinear::affine(1, 2));
  EXPECT_EQ(moved[1], PiecewiseLinear::affine(2, 2));
  for (long r : {1L, 3L}) EXPECT_EQ(cartan_characteristic(moved, r).T, rational(r, 2));

  testkit::Random rng(50);
  for (int t = 0; t < 50; ++t) {
    auto curve = random_curve(rng, static_cast<std::size_t>(rng.integer(1, 3)));
    auto re = reanchor(curve, rng.rational(), rng.rational());
    Rational r = abs(rng.rational(10, 3));
    EXPECT_EQ(cartan_characteristic(curve, r).T, cartan_characteristic(re, r).T);
  }
}

TEST(Curves, FunctionBridge) {
  testkit::Random rng(51);
  for (int t = 0; t < 50; ++t) {
    auto f = rng.function();
    if (f.breakpoints().empty() && f.left_slope() == 0) continue;
    auto [h, g] = entire_decomposition(f);
    if (h == g) continue;
    auto curve = TropicalCurve::validate_reduced({g, h});
    Rational r = abs(rng.rational(10, 3));
    Rational f0 = f(Rational(0));
    Rational fplus0 = f0 > 0 ? f0 : Rational(0);
    EXPECT_EQ(cartan_characteristic(curve, r).T, characteristic(f, r).T - fplus0);
    if (f0 == 0) EXPECT_EQ(cartan_characteristic(curve, r).T, characteristic(f, r).T);
    EXPECT_TRUE(is_entire(curve.envelope()));
  }
}

TEST(Curves, Nmin) {
  EXPECT_EQ(nmin(PiecewiseLinear::affine(2, 1), relu(), 5), 0);
  EXPECT_EQ(nmin(relu(), relu(), 4), 2);
  EXPECT_EQ(nmin(relu(), lines({{-1, 1}, {0, 0}}), 3), 1);
  EXPECT_THROW(nmin(negate(relu()), relu(), 1), Error);
  EXPECT_EQ(common_root_counting(relu(), lines({{-1, 1}, {0, 0}}), 3), 0);
  EXPECT_EQ(common_root_counting(relu(), lines({{0, 2}, {0, 0}}), 3), Rational(3, 2));
}

TEST(Curves, CombinationBound) {
  auto c = zero_x();
  std::vector<MaxPlus> fhat = {B, v(0)}, ftilde = {v(0), B};
  for (long r : {0L, 1L, 5L, 30L}) {
    EXPECT_LE(lemma47_residual(c, fhat, ftilde, r), 0);
    EXPECT_LE(lemma47_residual(c, fhat, fhat, r), 0);
  }
  std::vector<MaxPlus> none = {B, B};
  try {
    lemma47_residual(c, none, fhat, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadCoefficients);
  }
}

// With fhat = max(x-1, 0) and ftilde = max(-x-1, 0) the two root sets are
// disjoint, yet the smaller root count is still positive, so the inequality
// with the min of the two counts fails once r > 1. The version counting the
// shared roots only holds.
TEST(Curves, CombinationBoundMinFormFails) {
  auto curve = TropicalCurve::validate_reduced({lines({{-1, 1}, {0, 0}}), lines({{-1, -1}, {0, 0}})});
  std::vector<MaxPlus> fhat = {v(0), B}, ftilde = {B, v(0)};
  for (long r : {2L, 5L, 40L}) {
    auto rep = lemma47_report(curve, fhat, ftilde, r);
    EXPECT_EQ(rep.characteristic, Rational(r - 1));
    EXPECT_EQ(rep.nmin, rational(r - 1, 2));
    EXPECT_EQ(rep.rhs(), Rational(r - 1));
    EXPECT_GT(rep.residual(), 0);
    EXPECT_EQ(rep.common_roots, 0);
    EXPECT_LE(rep.common_root_residual(), 0);
  }
}

TEST(Curves, CombinationBoundCommonRootsRandom) {
  testkit::Random rng(52);
  for (int t = 0; t < 40; ++t) {
    auto curve = random_curve(rng, static_cast<std::size_t>(rng.integer(1, 3)));
    std::vector<MaxPlus> a, b;
    for (std::size_t j = 0; j < curve.coordinates().size(); ++j) {
      a.push_back(rng.maxplus(0.3));
      b.push_back(rng.maxplus(0.3));
    }
    a[0] = v(rng.rational());
    b[1] = v(rng.rational());
    for (long r : {0L, 1L, 3L, 10L, 100L}) {
      auto rep = lemma47_report(curve, a, b, r);
      EXPECT_LE(rep.common_roots, rep.nmin);
      EXPECT_LE(rep.common_root_residual(), 0);
    }
  }
}
