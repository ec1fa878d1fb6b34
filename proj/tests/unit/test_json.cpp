#include <gtest/gtest.h>

#include "support/random.hpp"
#include "tropical/error.hpp"
#include "tropical/json_io.hpp"

namespace tropical {
namespace {

using testkit::Random;

TEST(Json, FunctionRoundTrip) {
  Random rng(71);
  for (int i = 0; i < 100; ++i) {
    PiecewiseLinear f = rng.function(6);
    Json j = to_json(f);
    EXPECT_EQ(function_from_json(Json::parse(j.dump())), f);
  }
}

TEST(Json, FunctionSchema) {
  PiecewiseLinear f = PiecewiseLinear::from_points(0, {{Rational(1, 2), 3}}, 2);
  Json j = to_json(f);
  EXPECT_EQ(j["left_slope"], "0");
  EXPECT_EQ(j["right_slope"], "2");
  EXPECT_EQ(j["breakpoints"][0][0], "1/2");
  EXPECT_EQ(j["anchor"][1], "3");
}

TEST(Json, AffineNeedsEqualSlopes) {
  Json j = {{"left_slope", "1"}, {"anchor", {"0", "0"}}, {"breakpoints", Json::array()}, {"right_slope", "2"}};
  try {
    function_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(Json, AnchorMustLieOnFunction) {
  Json j = {{"left_slope", "0"}, {"anchor", {"0", "5"}}, {"breakpoints", {{"0", "1"}}}, {"right_slope", "1"}};
  EXPECT_THROW(function_from_json(j), Error);
}

TEST(Json, MalformedRational) {
  Json j = {{"left_slope", "1/0"}, {"anchor", {"0", "0"}}, {"breakpoints", Json::array()}, {"right_slope", "1"}};
  EXPECT_THROW(function_from_json(j), Error);
  EXPECT_THROW(function_from_json(Json::parse("[1,2]")), Error);
}

TEST(Json, MatrixRoundTrip) {
  Random rng(72);
  for (int i = 0; i < 30; ++i) {
    TropicalMatrix m = rng.matrix(1 + rng.index(4), 1 + rng.index(4), 0.3);
    EXPECT_EQ(matrix_from_json(Json::parse(to_json(m).dump())), m);
  }
  Json j = Json::parse(R"({"rows": 1, "cols": 2, "entries": [["-inf", "3/2"]]})");
  TropicalMatrix m = matrix_from_json(j);
  EXPECT_TRUE(m(0, 0).is_bottom());
  EXPECT_EQ(m(0, 1), MaxPlus(Rational(3, 2)));
}

TEST(Json, MatrixShapeMismatch) {
  Json j = Json::parse(R"({"rows": 2, "cols": 2, "entries": [["0", "1"]]})");
  EXPECT_THROW(matrix_from_json(j), Error);
}

TEST(Json, CurveAndInstance) {
  std::vector<PiecewiseLinear> g{PiecewiseLinear::identity(), PiecewiseLinear::constant(0),
                                 PiecewiseLinear::affine(-1, 0)};
  TropicalCurve curve = validate_reduced(g);
  EXPECT_EQ(curve_from_json(to_json(curve)).coordinates().size(), 3u);

  TropicalMatrix a(3, 4,
                   {MaxPlus(Rational(0)), MaxPlus(), MaxPlus(), MaxPlus(Rational(1)),
                    MaxPlus(), MaxPlus(Rational(0)), MaxPlus(), MaxPlus(Rational(2)),
                    MaxPlus(), MaxPlus(), MaxPlus(Rational(0)), MaxPlus(Rational(0))});
  SmtInstance inst(curve, a, Rational(1, 2));
  SmtInstance back = instance_from_json(Json::parse(to_json(inst).dump()));
  EXPECT_EQ(back.q(), 3u);
  EXPECT_EQ(back.step(), Rational(1, 2));
  EXPECT_EQ(back.coefficients(), a);

  Json bad = to_json(inst);
  bad["q"] = 5;
  EXPECT_THROW(instance_from_json(bad), Error);
}

}  // namespace
}  // namespace tropical
