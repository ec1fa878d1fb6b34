#include <gtest/gtest.h>

#include <chrono>

#include "support/random.hpp"
#include "tropical/error.hpp"
#include "tropical/linalg.hpp"

using namespace tropical;

namespace {

const MaxPlus B = MaxPlus::bottom();
MaxPlus v(long p) { return MaxPlus(Rational(p)); }

// three nested loops straight from the definition
MaxPlus brute_det3(const TropicalMatrix& a) {
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  MaxPlus best;
  for (const auto& p : perms) best = oplus(best, odot(odot(a(0, p[0]), a(1, p[1])), a(2, p[2])));
  return best;
}

}  // namespace

TEST(Linalg, Products) {
  TropicalMatrix a(2, 2, {v(1), B, B, v(2)});
  TropicalMatrix b(2, 2, {v(0), v(1), v(3), B});
  EXPECT_EQ(mat_odot(a, b), TropicalMatrix(2, 2, {v(1), v(2), v(5), B}));
  testkit::Random rng(30);
  auto m = rng.matrix(3, 4, 0.3);
  EXPECT_EQ(mat_odot(m, TropicalMatrix::identity(4)), m);
  EXPECT_EQ(mat_odot(TropicalMatrix::identity(3), m), m);
  EXPECT_EQ(mat_oplus(m, TropicalMatrix(3, 4)), m);
  EXPECT_THROW(mat_odot(m, m), Error);
  EXPECT_THROW(mat_oplus(m, TropicalMatrix(4, 3)), Error);
  EXPECT_THROW(TropicalMatrix(2, 2, {v(1)}), Error);
}

TEST(Linalg, DeterminantExamples) {
  TropicalMatrix ex(3, 3, {v(1), v(2), B, B, v(0), v(1), v(3), B, v(2)});
  for (auto eng : {DeterminantEngine::Permutation, DeterminantEngine::Assignment}) {
    EXPECT_EQ(tropical_determinant(ex, eng), v(6));
    EXPECT_EQ(tropical_determinant(TropicalMatrix::identity(5), eng), MaxPlus::unit());
    EXPECT_EQ(tropical_determinant(TropicalMatrix(2, 2, {v(0), B, v(0), B}), eng), B);
  }
  EXPECT_EQ(brute_det3(ex), v(6));
  EXPECT_THROW(tropical_determinant(TropicalMatrix(2, 3)), Error);
  try {
    tropical_determinant(TropicalMatrix::identity(10), DeterminantEngine::Permutation);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PermutationEngineTooLarge);
  }
}

TEST(Linalg, Regularity) {
  TropicalMatrix row_gap(2, 2, {v(1), v(0), B, B});
  EXPECT_FALSE(is_row_regular(row_gap));
  EXPECT_TRUE(is_row_regular(TropicalMatrix::identity(3)));
  EXPECT_TRUE(is_det_regular(TropicalMatrix::identity(3)));
  TropicalMatrix col_gap(2, 2, {v(0), B, v(0), B});
  EXPECT_TRUE(is_row_regular(col_gap));
  EXPECT_FALSE(is_det_regular(col_gap));
}

TEST(Linalg, EnginesAgreeRandom) {
  testkit::Random rng(31);
  for (int t = 0; t < 300; ++t) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 7));
    double density = static_cast<double>(rng.integer(0, 6)) / 10.0;
    auto a = rng.matrix(n, n, density);
    auto p = optimal_assignment(a, DeterminantEngine::Permutation);
    auto h = optimal_assignment(a, DeterminantEngine::Assignment);
    ASSERT_EQ(p.weight, h.weight) << "n=" << n;
    EXPECT_EQ(tropical_determinant(a.transposed()), h.weight);
    if (n == 3) EXPECT_EQ(brute_det3(a), p.weight);
    if (h.weight.is_finite()) {
      // the reported permutation realizes the weight
      Rational total = 0;
      for (std::size_t i = 0; i < n; ++i) total += a(i, h.permutation[i]).value();
      EXPECT_EQ(MaxPlus(total), h.weight);
    }
    // a Bottom row kills the determinant
    auto z = a;
    std::size_t row = rng.index(n);
    for (std::size_t j = 0; j < n; ++j) z(row, j) = B;
    EXPECT_EQ(tropical_determinant(z), B);
  }
}

TEST(Linalg, AssignmentScales) {
  testkit::Random rng(32);
  auto a = rng.matrix(50, 50, 0.2);
  auto t0 = std::chrono::steady_clock::now();
  auto d = tropical_determinant(a, DeterminantEngine::Assignment);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_TRUE(d.is_finite());
  EXPECT_LT(ms, 100.0);
}
