#pragma once

// Second main theorem harnesses for tropical holomorphic curves: the
// combinations f_k of a reduced representation, the auxiliary functions
// L, L~ and K, and exact evaluation of both sides of the Cartan-type
// inequality. Also the one-dimensional corollary and the worked example
// with two tropical polynomials.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tropical/curves.hpp"
#include "tropical/linalg.hpp"
#include "tropical/piecewise.hpp"

namespace tropical {

enum class Independence {
  Certified,  // dependence search exhausted every partition
  Unverified, // search budget ran out
};

class SmtInstance {
 public:
  // coefficients is (n+1) x (q+1) with q > n. Throws DimensionMismatch,
  // InvalidArgument (q <= n, c == 0, basis Gondran-Minoux dependent) and
  // EmptyColumn with the column index.
  SmtInstance(TropicalCurve basis, TropicalMatrix coefficients, Rational step = Rational(1));

  const TropicalCurve& basis() const noexcept { return basis_; }
  const TropicalMatrix& coefficients() const noexcept { return coefficients_; }
  const Rational& step() const noexcept { return step_; }
  std::size_t n() const noexcept { return basis_.dimension(); }
  std::size_t q() const noexcept { return coefficients_.cols() - 1; }
  Independence independence() const noexcept { return independence_; }

  // {j : a_{j nu} finite}
  std::vector<std::size_t> support(std::size_t nu) const;

 private:
  TropicalCurve basis_;
  TropicalMatrix coefficients_;
  Rational step_;
  Independence independence_ = Independence::Unverified;
};

// f_0..f_q
std::vector<PiecewiseLinear> build_combinations(const SmtInstance& inst);

// ddg of f_{n+1}..f_q over the basis.
std::size_t lambda_ddg(const SmtInstance& inst);

struct LFunction {
  std::vector<RootPoleEvent> numerator_events;    // of f_0 (.) ... (.) f_q
  std::vector<RootPoleEvent> denominator_events;  // of C(f_0..f_n)
  PiecewiseLinear function;
};

// L = (f_0 + ... + f_q) - C(f_0..f_n). Throws TooManyFunctions.
LFunction L_function(const SmtInstance& inst);

// L~ = f_0 + f_1(x+c) + ... + f_n(x+nc) + f_{n+1} + ... + f_q - C(f_0..f_n).
// Checks L~ = L + sum_j (f_j(x+jc) - f_j) and throws InternalInconsistency
// otherwise.
PiecewiseLinear Ltilde_function(const SmtInstance& inst);

// K = C(0, f_1 - f_0, .., f_n - f_0) + sum_j (f_0(x+jc) - f_j(x+jc)).
PiecewiseLinear K_function(const SmtInstance& inst);

using NamedValues = std::vector<std::pair<std::string, Rational>>;

const Rational& lookup(const NamedValues& values, const std::string& name);

struct SmtReport {
  Rational r;
  Rational lhs;
  Rational rhs;
  // every additive term of the right-hand side, plus the factors of lhs
  NamedValues components;
  std::size_t lambda = 0;
  bool witness_holds = false;  // v = L~ (.) K
  Independence independence = Independence::Unverified;
};

// Throws InvalidArgument for r < 0.
SmtReport theorem62_report(const SmtInstance& inst, const Rational& r);

// Sum of root counts of the f_j, the Casoratian root count, the main gap,
// and the simplified L-form gap. Residuals are reported, never asserted.
NamedValues ramification_report(const SmtInstance& inst, const Rational& r);

struct Cor72Term {
  Rational value;
  Rational root_counting;  // N(r, 1 (/) (f (+) a))
  // f (+) a == f: the term equals N(r, 1 (/) f) and T differs from it by the
  // bounded amount max(-a, 0) + f(0)
  bool dominated = false;
  Rational dominated_bound;
};

struct Cor72Report {
  Rational r;
  Rational characteristic;  // T(r, f)
  Rational q_times_T;
  Rational sum_root_counting;
  Rational residual;  // qT - sum
  std::vector<Cor72Term> terms;
};

// Needs distinct values with max a_k < inf {f(s) : s a pole}. Throws
// ConstantFunction, ConditionViolated (index of the offending value) and
// InvalidArgument (no values, repeated values, r < 0).
Cor72Report corollary72_report(const PiecewiseLinear& f, std::span<const Rational> values, const Rational& r);

struct Example65Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Example65Record {
  Rational step;
  bool applicable = false;  // the fixed expectations only apply with c = 1
  PiecewiseLinear casoratian;
  std::vector<Example65Check> checks;

  bool passed() const;
};

// f0 = max(x+1, 1), f1 = max(1-x, 2x-2)
std::pair<PiecewiseLinear, PiecewiseLinear> example65_functions();

Example65Record example65_verify(const PiecewiseLinear& f0, const PiecewiseLinear& f1, const Rational& step);
Example65Record example65_reproduce();

struct RootBalance {
  Rational inputs;      // root multiplicity of f0 and f1 in the window
  Rational casoratian;  // root multiplicity of C(f0, f1) in the window
  bool equal = false;
};

// Exploratory. Throws NotEntire.
RootBalance root_balance_probe(const PiecewiseLinear& f0, const PiecewiseLinear& f1, const Rational& step,
                               const Rational& lo, const Rational& hi);

}  // namespace tropical
