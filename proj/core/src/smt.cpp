#include "tropical/smt.hpp"

#include <algorithm>
#include <string>

#include "tropical/casoratian.hpp"
#include "tropical/dependence.hpp"
#include "tropical/error.hpp"
#include "tropical/nevanlinna.hpp"
#include "tropical/span.hpp"

namespace tropical {

SmtInstance::SmtInstance(TropicalCurve basis, TropicalMatrix coefficients, Rational step)
    : basis_(std::move(basis)), coefficients_(std::move(coefficients)), step_(std::move(step)) {
  const std::size_t rows = basis_.coordinates().size();
  if (coefficients_.rows() != rows) {
    throw Error(ErrorCode::DimensionMismatch, "coefficient matrix needs " + std::to_string(rows) + " rows");
  }
  if (coefficients_.cols() <= rows) {
    throw Error(ErrorCode::InvalidArgument, "need q > n, i.e. more than n+1 columns");
  }
  if (step_ == 0) throw Error(ErrorCode::InvalidArgument, "shift step must be nonzero");
  for (std::size_t k = 0; k < coefficients_.cols(); ++k) {
    if (support(k).empty()) {
      throw Error(ErrorCode::EmptyColumn, "column " + std::to_string(k) + " has only Bottom entries", k);
    }
  }
  if (rows <= kDependenceSearchLimit) {
    auto search = search_dependence(basis_.coordinates());
    if (search.certificate) {
      throw Error(ErrorCode::InvalidArgument, "basis functions are linearly dependent in the Gondran-Minoux sense");
    }
    if (search.complete) independence_ = Independence::Certified;
  }
}

std::vector<std::size_t> SmtInstance::support(std::size_t nu) const {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < coefficients_.rows(); ++j) {
    if (coefficients_(j, nu).is_finite()) idx.push_back(j);
  }
  return idx;
}

std::vector<PiecewiseLinear> build_combinations(const SmtInstance& inst) {
  const auto& a = inst.coefficients();
  std::vector<PiecewiseLinear> fs;
  fs.reserve(a.cols());
  std::vector<MaxPlus> column(a.rows());
  for (std::size_t k = 0; k < a.cols(); ++k) {
    for (std::size_t j = 0; j < a.rows(); ++j) column[j] = a(j, k);
    auto f = linear_combination(column, inst.basis().coordinates());
    if (!f) throw Error(ErrorCode::EmptyColumn, "column " + std::to_string(k) + " has only Bottom entries", k);
    fs.push_back(std::move(*f));
  }
  return fs;
}

std::size_t lambda_ddg(const SmtInstance& inst) {
  auto fs = build_combinations(inst);
  SpanBasis basis(std::vector<PiecewiseLinear>(inst.basis().coordinates().begin(),
                                               inst.basis().coordinates().end()));
  std::span<const PiecewiseLinear> tail(fs.begin() + static_cast<std::ptrdiff_t>(inst.n() + 1), fs.end());
  return degree_of_degeneracy(tail, basis);
}

namespace {

PiecewiseLinear head_casoratian(const SmtInstance& inst, const std::vector<PiecewiseLinear>& fs) {
  return casoratian(CasoratiSpec{std::vector<PiecewiseLinear>(fs.begin(), fs.begin() + static_cast<std::ptrdiff_t>(inst.n() + 1)),
                                 inst.step()});
}

Rational positive(const Rational& v) { return v > 0 ? v : Rational(0); }

struct Auxiliary {
  std::vector<PiecewiseLinear> fs;
  PiecewiseLinear cas;
  PiecewiseLinear L;
  PiecewiseLinear Ltilde;
};

Auxiliary auxiliary(const SmtInstance& inst) {
  Auxiliary aux;
  aux.fs = build_combinations(inst);
  aux.cas = head_casoratian(inst, aux.fs);
  aux.L = tminus(tplus_all(aux.fs), aux.cas);

  const std::size_t n = inst.n();
  std::vector<PiecewiseLinear> num;
  num.reserve(aux.fs.size());
  PiecewiseLinear correction;
  for (std::size_t j = 0; j < aux.fs.size(); ++j) {
    if (j >= 1 && j <= n) {
      PiecewiseLinear shifted = shift(aux.fs[j], inst.step() * static_cast<long>(j));
      correction = tplus(correction, tminus(shifted, aux.fs[j]));
      num.push_back(std::move(shifted));
    } else {
      num.push_back(aux.fs[j]);
    }
  }
  aux.Ltilde = tminus(tplus_all(num), aux.cas);
  if (aux.Ltilde != tplus(aux.L, correction)) {
    throw Error(ErrorCode::InternalInconsistency, "L~ differs from L plus the shift correction");
  }
  return aux;
}

PiecewiseLinear K_from(const SmtInstance& inst, const std::vector<PiecewiseLinear>& fs) {
  const std::size_t n = inst.n();
  std::vector<PiecewiseLinear> ratios;
  ratios.push_back(PiecewiseLinear::constant(0));
  PiecewiseLinear k;
  for (std::size_t j = 1; j <= n; ++j) {
    ratios.push_back(tminus(fs[j], fs[0]));
    Rational c = inst.step() * static_cast<long>(j);
    k = tplus(k, tminus(shift(fs[0], c), shift(fs[j], c)));
  }
  return tplus(casoratian_envelope(ratios, inst.step()), k);
}

std::string describe(const PiecewiseLinear& f) {
  std::string s = "slope " + to_string(f.left_slope());
  for (const auto& p : f.breakpoints()) s += " | (" + to_string(p.x) + ", " + to_string(p.y) + ")";
  return s + " | slope " + to_string(f.right_slope());
}

std::string describe(const std::vector<RootPoleEvent>& evs) {
  std::string s;
  for (const auto& e : evs) {
    if (!s.empty()) s += ", ";
    s += (e.kind == EventKind::Root ? "root " : "pole ") + to_string(e.location) + " x" +
         to_string(e.multiplicity());
  }
  return s.empty() ? "none" : s;
}

}  // namespace

LFunction L_function(const SmtInstance& inst) {
  auto fs = build_combinations(inst);
  auto cas = head_casoratian(inst, fs);
  auto prod = tplus_all(fs);
  LFunction out;
  out.numerator_events = events(prod);
  out.denominator_events = events(cas);
  out.function = tminus(prod, cas);
  return out;
}

PiecewiseLinear Ltilde_function(const SmtInstance& inst) { return auxiliary(inst).Ltilde; }

PiecewiseLinear K_function(const SmtInstance& inst) { return K_from(inst, build_combinations(inst)); }

const Rational& lookup(const NamedValues& values, const std::string& name) {
  for (const auto& [key, value] : values) {
    if (key == name) return value;
  }
  throw Error(ErrorCode::InvalidArgument, "no component named " + name);
}

SmtReport theorem62_report(const SmtInstance& inst, const Rational& r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
  const std::size_t n = inst.n();
  const std::size_t q = inst.q();
  const auto& a = inst.coefficients();
  const auto coords = inst.basis().coordinates();
  Auxiliary aux = auxiliary(inst);
  const auto& fs = aux.fs;

  SmtReport rep;
  rep.r = r;
  rep.lambda = lambda_ddg(inst);
  rep.independence = inst.independence();
  const Rational multiplier(static_cast<long>(q - n - rep.lambda));
  const Rational cartan = cartan_characteristic(inst.basis(), r).T;
  rep.lhs = multiplier * cartan;

  const Rational zero(0);
  const Rational neg_r = -r;
  Rational n_roots = counting(negate(aux.Ltilde), r);
  Rational n_poles = counting(aux.Ltilde, r);

  // m(r, d) for d(x) = f_j(x+lc) - f_0(x+lc) - f_j(x+mc) + f_0(x+mc)
  Rational proximity_sum = 0;
  for (std::size_t j = 1; j <= q; ++j) {
    for (std::size_t l = 0; l <= n; ++l) {
      for (std::size_t m = 0; m <= n; ++m) {
        if (l == m) continue;
        Rational cl = inst.step() * static_cast<long>(l);
        Rational cm = inst.step() * static_cast<long>(m);
        Rational total = 0;
        for (const Rational* x : {&r, &neg_r}) {
          Rational xl = *x + cl;
          Rational xm = *x + cm;
          total += positive(fs[j](xl) - fs[0](xl) - fs[j](xm) + fs[0](xm));
        }
        proximity_sum += total / 2;
      }
    }
  }

  Rational shift_correction = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    Rational at = inst.step() * static_cast<long>(j);
    shift_correction += fs[j](at) - fs[j](zero);
  }

  Rational full_sum = 0;
  Rational partial_sum = 0;
  for (std::size_t nu = n + 1; nu <= q; ++nu) {
    auto idx = inst.support(nu);
    if (idx.size() == n + 1) {
      Rational lo = a(idx[0], nu).value();
      for (std::size_t j : idx) lo = std::min(lo, a(j, nu).value());
      full_sum += lo;
    } else {
      std::optional<Rational> hi;
      for (std::size_t j : idx) {
        Rational v = a(j, nu).value() + coords[j](zero);
        if (!hi || v > *hi) hi = v;
      }
      partial_sum += *hi;
    }
  }
  const Rational gmax_term = multiplier * inst.basis().max_at_zero();
  const Rational L0 = aux.L(zero);

  rep.rhs = n_roots - n_poles + proximity_sum + L0 + shift_correction - full_sum - partial_sum - gmax_term;

  PiecewiseLinear v;
  for (std::size_t nu = n + 1; nu <= q; ++nu) v = tplus(v, fs[nu]);
  PiecewiseLinear K = K_from(inst, fs);
  rep.witness_holds = v == tplus(aux.Ltilde, K);

  rep.components = {
      {"multiplier", multiplier},
      {"cartan_T", cartan},
      {"N_roots_Ltilde", n_roots},
      {"N_poles_Ltilde", n_poles},
      {"proximity_sum", proximity_sum},
      {"L_at_0", L0},
      {"shift_correction", shift_correction},
      {"full_column_min_sum", full_sum},
      {"partial_column_max_sum", partial_sum},
      {"gmax_term", gmax_term},
      {"v_mean", (v(r) + v(neg_r)) / 2},
      {"m_K", proximity(K, r)},
      {"m_inverse_K", proximity(negate(K), r)},
  };
  return rep;
}

NamedValues ramification_report(const SmtInstance& inst, const Rational& r) {
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
  auto fs = build_combinations(inst);
  auto cas = head_casoratian(inst, fs);
  auto L = tminus(tplus_all(fs), cas);
  const std::size_t lambda = lambda_ddg(inst);
  const Rational multiplier(static_cast<long>(inst.q() - inst.n() - lambda));
  const Rational cartan = cartan_characteristic(inst.basis(), r).T;
  const Rational lhs = multiplier * cartan;

  Rational sum_f = 0;
  for (const auto& f : fs) sum_f += root_counting(f, r);
  const Rational n_cas = root_counting(cas, r);
  const Rational gap = sum_f - n_cas;
  const Rational roots_L = root_counting(L, r);
  const Rational poles_L = counting(L, r);
  return {
      {"multiplier", multiplier},
      {"cartan_T", cartan},
      {"lhs", lhs},
      {"sum_root_counting_f", sum_f},
      {"root_counting_casoratian", n_cas},
      {"counting_gap", gap},
      {"residual", lhs - gap},
      {"root_counting_L", roots_L},
      {"pole_counting_L", poles_L},
      {"L_gap", roots_L - poles_L},
      {"L_residual", lhs - (roots_L - poles_L)},
  };
}

Cor72Report corollary72_report(const PiecewiseLinear& f, std::span<const Rational> values, const Rational& r) {
  if (f.breakpoints().empty() && f.left_slope() == 0) {
    throw Error(ErrorCode::ConstantFunction, "f must be nonconstant");
  }
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one value");
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
  for (std::size_t k = 0; k < values.size(); ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (values[j] == values[k]) throw Error(ErrorCode::InvalidArgument, "values must be distinct", k);
    }
  }
  std::optional<Rational> pole_inf;
  for (const auto& e : events(f)) {
    if (e.kind != EventKind::Pole) continue;
    Rational v = f(e.location);
    if (!pole_inf || v < *pole_inf) pole_inf = v;
  }
  if (pole_inf) {
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (values[k] >= *pole_inf) {
        throw Error(ErrorCode::ConditionViolated,
                    "value a_" + std::to_string(k + 1) + " = " + to_string(values[k]) +
                        " is not below the pole infimum " + to_string(*pole_inf),
                    k);
      }
    }
  }

  Cor72Report rep;
  rep.r = r;
  rep.characteristic = characteristic(f, r).T;
  rep.q_times_T = rep.characteristic * static_cast<long>(values.size());
  rep.sum_root_counting = 0;
  const Rational f0 = f(Rational(0));
  for (const Rational& a : values) {
    Cor72Term term;
    term.value = a;
    PiecewiseLinear joined = tmax(f, PiecewiseLinear::constant(a));
    term.root_counting = root_counting(joined, r);
    term.dominated = joined == f;
    if (term.dominated) term.dominated_bound = positive(-a) + f0;
    rep.sum_root_counting += term.root_counting;
    rep.terms.push_back(std::move(term));
  }
  rep.residual = rep.q_times_T - rep.sum_root_counting;
  return rep;
}

bool Example65Record::passed() const {
  if (!applicable) return false;
  return std::all_of(checks.begin(), checks.end(), [](const Example65Check& c) { return c.passed; });
}

std::pair<PiecewiseLinear, PiecewiseLinear> example65_functions() {
  return {PiecewiseLinear::from_points(0, {{0, 1}}, 1), PiecewiseLinear::from_points(-1, {{1, 0}}, 2)};
}

Example65Record example65_verify(const PiecewiseLinear& f0, const PiecewiseLinear& f1, const Rational& step) {
  Example65Record rec;
  rec.step = step;
  rec.casoratian = casoratian(CasoratiSpec{{f0, f1}, step});
  rec.applicable = step == 1;
  if (!rec.applicable) return rec;

  const PiecewiseLinear& cas = rec.casoratian;
  const PiecewiseLinear expected = PiecewiseLinear::from_points(-1, {{-1, 3}, {Rational(2, 3), 3}}, 3);
  rec.checks.push_back({"casoratian_pieces", cas == expected, describe(cas)});

  const std::vector<RootPoleEvent> expected_roots = {{-1, 1, EventKind::Root},
                                                     {Rational(2, 3), 3, EventKind::Root}};
  rec.checks.push_back({"casoratian_roots", events(cas) == expected_roots, describe(events(cas))});

  const std::vector<RootPoleEvent> r0 = {{0, 1, EventKind::Root}};
  const std::vector<RootPoleEvent> r1 = {{1, 3, EventKind::Root}};
  rec.checks.push_back({"input_roots", events(f0) == r0 && events(f1) == r1,
                        "f0: " + describe(events(f0)) + "; f1: " + describe(events(f1))});

  const Rational zero(0), one(1);
  bool regular = omega(cas, zero) == 0 && omega(cas, one) == 0;
  rec.checks.push_back({"regular_at_0_and_1", regular,
                        "omega(0) = " + to_string(omega(cas, zero)) + ", omega(1) = " + to_string(omega(cas, one))});

  const std::vector<std::pair<Rational, Rational>> book = {{-1, -1}, {0, 1}, {1, 3}, {Rational(2, 3), -3}};
  bool ok = true;
  std::string detail;
  for (const auto& [x, want] : book) {
    Rational got = omega(f0, x) + omega(f1, x) - omega(cas, x);
    ok = ok && got == want;
    if (!detail.empty()) detail += ", ";
    detail += to_string(x) + ": " + to_string(got);
  }
  rec.checks.push_back({"bookkeeping", ok, detail});
  return rec;
}

Example65Record example65_reproduce() {
  auto [f0, f1] = example65_functions();
  return example65_verify(f0, f1, Rational(1));
}

RootBalance root_balance_probe(const PiecewiseLinear& f0, const PiecewiseLinear& f1, const Rational& step,
                               const Rational& lo, const Rational& hi) {
  auto cas = casoratian(CasoratiSpec{{f0, f1}, step});
  auto roots = [&](const PiecewiseLinear& f) {
    Rational total = 0;
    for (const auto& e : events(f, lo, hi)) {
      if (e.kind == EventKind::Root) total += e.multiplicity();
    }
    return total;
  };
  RootBalance out;
  out.inputs = roots(f0) + roots(f1);
  out.casoratian = roots(cas);
  out.equal = out.inputs == out.casoratian;
  return out;
}

}  // namespace tropical
