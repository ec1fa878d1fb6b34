#include "tropical/casoratian.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tropical/error.hpp"
#include "tropical/linalg.hpp"

namespace tropical {

namespace {

void check_symbolic(std::size_t count, const Rational& step) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "Casoratian of no functions");
  if (step == 0) throw Error(ErrorCode::InvalidArgument, "shift step must be nonzero");
  if (count > kSymbolicCasoratianLimit) {
    throw Error(ErrorCode::TooManyFunctions,
                "symbolic Casoratian limited to " + std::to_string(kSymbolicCasoratianLimit) + " functions");
  }
}

// shifted[i][k] = g_i(x + k c)
std::vector<std::vector<PiecewiseLinear>> shift_table(std::span<const PiecewiseLinear> g, const Rational& step) {
  std::vector<std::vector<PiecewiseLinear>> table(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    table[i].reserve(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
      table[i].push_back(shift(g[i], step * static_cast<long>(k)));
    }
  }
  return table;
}

PiecewiseLinear permutation_envelope(std::span<const PiecewiseLinear> g, const Rational& step, bool transposed) {
  check_symbolic(g.size(), step);
  const auto table = shift_table(g, step);
  std::vector<std::size_t> perm(g.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<PiecewiseLinear> products;
  std::vector<PiecewiseLinear> factors(g.size());
  do {
    for (std::size_t i = 0; i < g.size(); ++i) {
      factors[i] = transposed ? table[perm[i]][i] : table[i][perm[i]];
    }
    products.push_back(tplus_all(factors));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tmax_all(products);
}

TropicalMatrix shift_matrix(std::span<const PiecewiseLinear> g, const Rational& step, const Rational& x) {
  const std::size_t n = g.size();
  std::vector<MaxPlus> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational at = x + step * static_cast<long>(j);
      entries.emplace_back(g[i](at));
    }
  }
  return TropicalMatrix(n, n, std::move(entries));
}

}  // namespace

void validate(const CasoratiSpec& spec) {
  if (spec.functions.empty()) throw Error(ErrorCode::InvalidArgument, "Casoratian of no functions");
  if (spec.step == 0) throw Error(ErrorCode::InvalidArgument, "shift step must be nonzero");
  for (std::size_t i = 0; i < spec.functions.size(); ++i) {
    if (!is_entire(spec.functions[i])) {
      throw Error(ErrorCode::NotEntire, "function " + std::to_string(i) + " is not entire", i);
    }
  }
}

PiecewiseLinear casoratian(const CasoratiSpec& spec) {
  validate(spec);
  return permutation_envelope(spec.functions, spec.step, false);
}

PiecewiseLinear casoratian_transposed(const CasoratiSpec& spec) {
  validate(spec);
  return permutation_envelope(spec.functions, spec.step, true);
}

PiecewiseLinear casoratian_envelope(std::span<const PiecewiseLinear> functions, const Rational& step) {
  return permutation_envelope(functions, step, false);
}

Rational casoratian_at(const CasoratiSpec& spec, const Rational& x) {
  validate(spec);
  // every entry is finite, so the determinant is too
  return tropical_determinant(shift_matrix(spec.functions, spec.step, x)).value();
}

std::optional<PiecewiseLinear> casoratian_with_bottom(std::span<const std::optional<PiecewiseLinear>> functions,
                                                      const Rational& step) {
  std::vector<PiecewiseLinear> finite;
  for (const auto& f : functions) {
    if (!f) return std::nullopt;
    finite.push_back(*f);
  }
  return casoratian(CasoratiSpec{std::move(finite), step});
}

std::vector<UnitRowWitness> unit_row_exploration(std::span<const PiecewiseLinear> g, const Rational& step,
                                                 std::span<const Rational> samples) {
  if (g.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one function besides the unit");
  if (g.size() + 1 > kPermutationEngineLimit) {
    throw Error(ErrorCode::TooManyFunctions, "exploration uses the permutation engine");
  }
  if (step == 0) throw Error(ErrorCode::InvalidArgument, "shift step must be nonzero");
  std::vector<PiecewiseLinear> with_unit;
  with_unit.push_back(PiecewiseLinear::constant(0));
  with_unit.insert(with_unit.end(), g.begin(), g.end());
  const std::size_t n = g.size();

  std::vector<UnitRowWitness> out;
  out.reserve(samples.size());
  for (const Rational& x : samples) {
    UnitRowWitness w;
    w.x = x;
    auto best = optimal_assignment(shift_matrix(with_unit, step, x), DeterminantEngine::Permutation);
    w.value = best.weight.value();
    w.permutation = best.permutation;
    w.fixes_first = best.permutation[0] == 0;
    w.first_to_last = best.permutation[0] == n;
    Rational shifted_x = x + step;
    Rational c_shifted = tropical_determinant(shift_matrix(g, step, shifted_x)).value();
    Rational c_plain = tropical_determinant(shift_matrix(g, step, x)).value();
    w.below_shifted = w.value <= c_shifted;
    w.below_unshifted = w.value <= c_plain;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace tropical
