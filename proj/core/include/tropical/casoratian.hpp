#pragma once

// Tropical Casorati determinant
//   C(g_0..g_n)(x) = max over permutations pi of sum_i g_i(x + pi(i) c).

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropical/piecewise.hpp"

namespace tropical {

struct CasoratiSpec {
  std::vector<PiecewiseLinear> functions;
  Rational step{1};
};

inline constexpr std::size_t kSymbolicCasoratianLimit = 7;

// Throws InvalidArgument (empty, c == 0) or NotEntire with the index.
void validate(const CasoratiSpec& spec);

// Exact envelope over all (n+1)! products. Throws TooManyFunctions above the
// symbolic limit.
PiecewiseLinear casoratian(const CasoratiSpec& spec);

// Same determinant expanded along the other index:
//   max over pi of sum_i g_{pi(i)}(x + i c).
PiecewiseLinear casoratian_transposed(const CasoratiSpec& spec);

// The permutation envelope without the entire check, for quotients such as
// C(1, f_1 - f_0, ...). Throws InvalidArgument and TooManyFunctions.
PiecewiseLinear casoratian_envelope(std::span<const PiecewiseLinear> functions, const Rational& step);

// Determinant of the matrix (g_i(x + j c)); no size limit.
Rational casoratian_at(const CasoratiSpec& spec, const Rational& x);

// Entries set to nullopt stand for the constant Bottom symbol, which makes
// every permutation product, and so the determinant, Bottom.
std::optional<PiecewiseLinear> casoratian_with_bottom(std::span<const std::optional<PiecewiseLinear>> functions,
                                                      const Rational& step);

struct UnitRowWitness {
  Rational x;
  Rational value;                        // C(1o, g_1..g_n)(x)
  std::vector<std::size_t> permutation;  // a maximizer, lexicographically first
  bool fixes_first = false;              // pi(0) == 0
  bool first_to_last = false;            // pi(0) == n
  bool below_shifted = false;            // value <= C(g_1(x+c), .., g_n(x+c))
  bool below_unshifted = false;          // value <= C(g_1, .., g_n)(x)
};

// For C(1o, g_1..g_n) at each sample x: which permutation attains the max, and
// which of the two partial converses of the unit-row bound hold there.
// Exploratory only. Needs 1 <= n and n+1 <= the permutation engine limit.
std::vector<UnitRowWitness> unit_row_exploration(std::span<const PiecewiseLinear> g, const Rational& step,
                                                 std::span<const Rational> samples);

}  // namespace tropical
