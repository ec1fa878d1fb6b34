#include "tropical/piecewise.hpp"

#include <algorithm>

#include "tropical/error.hpp"

namespace tropical {

namespace {

std::vector<Rational> merged_abscissae(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  std::vector<Rational> xs;
  xs.reserve(f.breakpoints().size() + g.breakpoints().size());
  auto a = f.breakpoints();
  auto b = g.breakpoints();
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].x < b[j].x)) {
      xs.push_back(a[i++].x);
    } else if (i == a.size() || b[j].x < a[i].x) {
      xs.push_back(b[j++].x);
    } else {
      xs.push_back(a[i].x);
      ++i;
      ++j;
    }
  }
  return xs;
}

// Index of the breakpoint at x, if any.
std::optional<std::size_t> find_breakpoint(std::span<const Point> pts, const Rational& x) {
  auto it = std::lower_bound(pts.begin(), pts.end(), x,
                             [](const Point& p, const Rational& v) { return p.x < v; });
  if (it != pts.end() && it->x == x) return static_cast<std::size_t>(it - pts.begin());
  return std::nullopt;
}

}  // namespace

PiecewiseLinear PiecewiseLinear::affine(const Rational& slope, const Rational& intercept) {
  PiecewiseLinear f;
  f.left_slope_ = slope;
  f.right_slope_ = slope;
  f.value_at_zero_ = intercept;
  return f;
}

PiecewiseLinear PiecewiseLinear::from_points(const Rational& left_slope, std::vector<Point> points,
                                             const Rational& right_slope) {
  if (points.empty()) {
    if (left_slope != right_slope) {
      throw Error(ErrorCode::InvalidArgument, "function without breakpoints needs equal end slopes");
    }
    throw Error(ErrorCode::InvalidArgument, "from_points needs at least one point; use affine()");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].x < points[i].x)) {
      throw Error(ErrorCode::InvalidArgument, "breakpoint abscissae must be strictly increasing", i);
    }
  }

  // slopes[i] is the slope left of points[i]; slopes.back() is the right slope
  std::vector<Rational> slopes;
  slopes.reserve(points.size() + 1);
  slopes.push_back(left_slope);
  for (std::size_t i = 1; i < points.size(); ++i) {
    slopes.emplace_back((points[i].y - points[i - 1].y) / (points[i].x - points[i - 1].x));
  }
  slopes.push_back(right_slope);

  PiecewiseLinear f;
  f.left_slope_ = left_slope;
  f.right_slope_ = right_slope;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (slopes[i] != slopes[i + 1]) f.points_.push_back(std::move(points[i]));
  }
  if (f.points_.empty()) {
    const Point& p = points.front();
    f.value_at_zero_ = points.front().y - left_slope * p.x;
  } else {
    f.value_at_zero_ = f(Rational(0));
  }
  return f;
}

PiecewiseLinear PiecewiseLinear::from_jumps(const Rational& left_slope,
                                            std::vector<std::pair<Rational, Rational>> jumps,
                                            const Point& through) {
  std::sort(jumps.begin(), jumps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Rational, Rational>> merged;
  for (auto& j : jumps) {
    if (!merged.empty() && merged.back().first == j.first) {
      merged.back().second += j.second;
    } else {
      merged.push_back(std::move(j));
    }
  }
  std::erase_if(merged, [](const auto& j) { return j.second == 0; });
  if (merged.empty()) return affine(left_slope, through.y - left_slope * through.x);

  std::vector<Point> pts;
  pts.reserve(merged.size());
  Rational slope = left_slope;
  Rational y = 0;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (i > 0) y += slope * (merged[i].first - merged[i - 1].first);
    pts.push_back({merged[i].first, y});
    slope += merged[i].second;
  }
  PiecewiseLinear f = from_points(left_slope, std::move(pts), slope);
  return add_constant(f, through.y - f(through.x));
}

Point PiecewiseLinear::anchor() const {
  if (!points_.empty()) return points_.front();
  return {Rational(0), value_at_zero_};
}

Rational PiecewiseLinear::operator()(const Rational& x) const {
  if (points_.empty()) return value_at_zero_ + left_slope_ * x;
  const Point& first = points_.front();
  if (x <= first.x) return first.y + left_slope_ * (x - first.x);
  const Point& last = points_.back();
  if (x >= last.x) return last.y + right_slope_ * (x - last.x);
  auto it = std::upper_bound(points_.begin(), points_.end(), x,
                             [](const Rational& v, const Point& p) { return v < p.x; });
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  return lo.y + (hi.y - lo.y) * (x - lo.x) / (hi.x - lo.x);
}

std::vector<Rational> PiecewiseLinear::piece_slopes() const {
  std::vector<Rational> slopes;
  slopes.reserve(points_.size() + 1);
  slopes.push_back(left_slope_);
  for (std::size_t i = 1; i < points_.size(); ++i) {
    slopes.emplace_back((points_[i].y - points_[i - 1].y) / (points_[i].x - points_[i - 1].x));
  }
  if (!points_.empty()) slopes.push_back(right_slope_);
  return slopes;
}

TermList::TermList(std::vector<TropicalTerm> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (!(terms_[i - 1].exponent < terms_[i].exponent)) {
      throw Error(ErrorCode::InvalidArgument, "term exponents must be strictly increasing", i);
    }
  }
}

Rational evaluate(const PiecewiseLinear& f, const Rational& x) { return f(x); }

Rational omega(const PiecewiseLinear& f, const Rational& x) {
  auto pts = f.breakpoints();
  auto idx = find_breakpoint(pts, x);
  if (!idx) return 0;
  const std::size_t i = *idx;
  Rational before = i == 0 ? f.left_slope() : Rational((pts[i].y - pts[i - 1].y) / (pts[i].x - pts[i - 1].x));
  Rational after = i + 1 == pts.size() ? f.right_slope()
                                       : Rational((pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x));
  return after - before;
}

std::vector<RootPoleEvent> events(const PiecewiseLinear& f, const Rational& lo, const Rational& hi) {
  std::vector<RootPoleEvent> out;
  auto slopes = f.piece_slopes();
  auto pts = f.breakpoints();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].x < lo || pts[i].x > hi) continue;
    Rational w = slopes[i + 1] - slopes[i];
    out.push_back({pts[i].x, w, w > 0 ? EventKind::Root : EventKind::Pole});
  }
  return out;
}

std::vector<RootPoleEvent> events(const PiecewiseLinear& f) {
  std::vector<RootPoleEvent> out;
  auto slopes = f.piece_slopes();
  auto pts = f.breakpoints();
  out.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational w = slopes[i + 1] - slopes[i];
    out.push_back({pts[i].x, w, w > 0 ? EventKind::Root : EventKind::Pole});
  }
  return out;
}

PiecewiseLinear tplus(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  auto xs = merged_abscissae(f, g);
  if (xs.empty()) {
    return PiecewiseLinear::affine(f.left_slope() + g.left_slope(), f(Rational(0)) + g(Rational(0)));
  }
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (auto& x : xs) {
    Rational y = f(x) + g(x);
    pts.push_back({std::move(x), std::move(y)});
  }
  return PiecewiseLinear::from_points(f.left_slope() + g.left_slope(), std::move(pts),
                                      f.right_slope() + g.right_slope());
}

PiecewiseLinear scale(const PiecewiseLinear& f, const Rational& k) {
  if (k == 0) return PiecewiseLinear::constant(0);
  auto src = f.breakpoints();
  if (src.empty()) return PiecewiseLinear::affine(k * f.left_slope(), k * f(Rational(0)));
  std::vector<Point> pts;
  pts.reserve(src.size());
  for (const auto& p : src) pts.push_back({p.x, k * p.y});
  return PiecewiseLinear::from_points(k * f.left_slope(), std::move(pts), k * f.right_slope());
}

PiecewiseLinear negate(const PiecewiseLinear& f) { return scale(f, Rational(-1)); }

PiecewiseLinear tminus(const PiecewiseLinear& f, const PiecewiseLinear& g) { return tplus(f, negate(g)); }

PiecewiseLinear add_constant(const PiecewiseLinear& f, const Rational& c) {
  auto src = f.breakpoints();
  if (src.empty()) return PiecewiseLinear::affine(f.left_slope(), f(Rational(0)) + c);
  std::vector<Point> pts;
  pts.reserve(src.size());
  for (const auto& p : src) pts.push_back({p.x, p.y + c});
  return PiecewiseLinear::from_points(f.left_slope(), std::move(pts), f.right_slope());
}

PiecewiseLinear shift(const PiecewiseLinear& f, const Rational& c) {
  auto src = f.breakpoints();
  if (src.empty()) return PiecewiseLinear::affine(f.left_slope(), f(c));
  std::vector<Point> pts;
  pts.reserve(src.size());
  for (const auto& p : src) pts.push_back({p.x - c, p.y});
  return PiecewiseLinear::from_points(f.left_slope(), std::move(pts), f.right_slope());
}

PiecewiseLinear tmax(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  auto xs = merged_abscissae(f, g);
  if (xs.empty()) {
    const Rational& fs = f.left_slope();
    const Rational& gs = g.left_slope();
    Rational f0 = f(Rational(0));
    Rational g0 = g(Rational(0));
    if (fs == gs) return f0 >= g0 ? f : g;
    Rational cross = (g0 - f0) / (fs - gs);
    Rational y = f(cross);
    std::vector<Point> pts{{std::move(cross), std::move(y)}};
    return PiecewiseLinear::from_points(fs < gs ? fs : gs, std::move(pts), fs < gs ? gs : fs);
  }

  std::vector<Rational> fv, gv;
  fv.reserve(xs.size());
  gv.reserve(xs.size());
  for (const auto& x : xs) {
    fv.push_back(f(x));
    gv.push_back(g(x));
  }

  std::vector<Rational> cand;
  cand.reserve(2 * xs.size() + 2);
  {
    Rational d0 = fv.front() - gv.front();
    Rational sd = f.left_slope() - g.left_slope();
    if (sd != 0) {
      Rational cross = xs.front() - d0 / sd;
      if (cross < xs.front()) cand.push_back(std::move(cross));
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    cand.push_back(xs[i]);
    if (i + 1 < xs.size()) {
      Rational da = fv[i] - gv[i];
      Rational db = fv[i + 1] - gv[i + 1];
      if ((da < 0 && db > 0) || (da > 0 && db < 0)) {
        cand.emplace_back(xs[i] + (xs[i + 1] - xs[i]) * da / (da - db));
      }
    }
  }
  {
    Rational dn = fv.back() - gv.back();
    Rational sd = f.right_slope() - g.right_slope();
    if (sd != 0) {
      Rational cross = xs.back() - dn / sd;
      if (cross > xs.back()) cand.push_back(std::move(cross));
    }
  }

  std::vector<Point> pts;
  pts.reserve(cand.size());
  for (auto& x : cand) {
    Rational a = f(x);
    Rational b = g(x);
    pts.push_back({std::move(x), a < b ? std::move(b) : std::move(a)});
  }

  Rational probe_left = pts.front().x - 1;
  Rational left = f(probe_left) >= g(probe_left) ? f.left_slope() : g.left_slope();
  Rational probe_right = pts.back().x + 1;
  Rational right = f(probe_right) >= g(probe_right) ? f.right_slope() : g.right_slope();
  return PiecewiseLinear::from_points(left, std::move(pts), right);
}

PiecewiseLinear tmin(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  return negate(tmax(negate(f), negate(g)));
}

namespace {

template <typename Op>
PiecewiseLinear reduce_tree(std::span<const PiecewiseLinear> fs, Op op) {
  if (fs.empty()) throw Error(ErrorCode::InvalidArgument, "reduction over an empty family");
  std::vector<PiecewiseLinear> level(fs.begin(), fs.end());
  while (level.size() > 1) {
    std::vector<PiecewiseLinear> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(op(level[i], level[i + 1]));
    if (level.size() % 2 == 1) next.push_back(std::move(level.back()));
    level = std::move(next);
  }
  return std::move(level.front());
}

}  // namespace

PiecewiseLinear tmax_all(std::span<const PiecewiseLinear> fs) {
  return reduce_tree(fs, [](const auto& a, const auto& b) { return tmax(a, b); });
}

PiecewiseLinear tplus_all(std::span<const PiecewiseLinear> fs) {
  return reduce_tree(fs, [](const auto& a, const auto& b) { return tplus(a, b); });
}

bool is_entire(const PiecewiseLinear& f) {
  auto slopes = f.piece_slopes();
  for (std::size_t i = 1; i < slopes.size(); ++i) {
    if (slopes[i] < slopes[i - 1]) return false;
  }
  return true;
}

bool is_tropical_unit(const PiecewiseLinear& f) { return f.breakpoints().empty(); }

std::optional<Rational> infimum(const PiecewiseLinear& f) {
  auto pts = f.breakpoints();
  if (pts.empty()) {
    if (f.left_slope() == 0) return f(Rational(0));
    return std::nullopt;
  }
  if (f.left_slope() > 0 || f.right_slope() < 0) return std::nullopt;
  Rational best = pts.front().y;
  for (const auto& p : pts) {
    if (p.y < best) best = p.y;
  }
  return best;
}

std::optional<Rational> supremum(const PiecewiseLinear& f) {
  auto inf = infimum(negate(f));
  if (!inf) return std::nullopt;
  return Rational(-*inf);
}

bool less_equal_everywhere(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  auto inf = infimum(tminus(g, f));
  return inf && *inf >= 0;
}

PiecewiseLinear upper_envelope(std::span<const TropicalTerm> lines) {
  if (lines.empty()) throw Error(ErrorCode::InvalidArgument, "envelope of an empty term list");
  std::vector<TropicalTerm> sorted(lines.begin(), lines.end());
  std::sort(sorted.begin(), sorted.end(), [](const TropicalTerm& a, const TropicalTerm& b) {
    if (a.exponent != b.exponent) return a.exponent < b.exponent;
    return a.coefficient < b.coefficient;
  });

  // crossing abscissa of two lines with distinct exponents
  auto cross = [](const TropicalTerm& a, const TropicalTerm& b) {
    return Rational((a.coefficient - b.coefficient) / (b.exponent - a.exponent));
  };

  std::vector<TropicalTerm> hull;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1].exponent == sorted[i].exponent) continue;
    const TropicalTerm& line = sorted[i];
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], line) <= cross(hull[hull.size() - 2], hull.back())) {
      hull.pop_back();
    }
    hull.push_back(line);
  }

  if (hull.size() == 1) return PiecewiseLinear::affine(hull[0].exponent, hull[0].coefficient);
  std::vector<Point> pts;
  pts.reserve(hull.size() - 1);
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Rational x = cross(hull[i], hull[i + 1]);
    Rational y = hull[i].coefficient + hull[i].exponent * x;
    pts.push_back({std::move(x), std::move(y)});
  }
  return PiecewiseLinear::from_points(hull.front().exponent, std::move(pts), hull.back().exponent);
}

PiecewiseLinear from_terms(const TermList& numerator, const TermList& denominator) {
  if (numerator.empty() || denominator.empty()) {
    throw Error(ErrorCode::InvalidArgument, "from_terms needs nonempty numerator and denominator");
  }
  return tminus(upper_envelope(numerator.terms()), upper_envelope(denominator.terms()));
}

TermRepresentation to_terms(const PiecewiseLinear& f, const Rational& a0, const Rational& b0) {
  std::vector<TropicalTerm> num{{a0, Rational(0)}};
  std::vector<TropicalTerm> den{{b0, Rational(0)}};
  Rational a = a0, l = 0, b = b0, s = 0;
  for (const auto& e : events(f)) {
    if (e.kind == EventKind::Root) {
      a -= e.location * e.omega;
      l += e.omega;
      num.push_back({a, l});
    } else {
      Rational m = e.multiplicity();
      b -= e.location * m;
      s += m;
      den.push_back({b, s});
    }
  }
  TermRepresentation rep{TermList(std::move(num)), TermList(std::move(den)), 0, 0};
  PiecewiseLinear rebuilt = from_terms(rep.numerator, rep.denominator);
  rep.unit_exponent = f.left_slope() - rebuilt.left_slope();
  rep.unit_coefficient = f(Rational(0)) - rebuilt(Rational(0));
  return rep;
}

EntireDecomposition entire_decomposition(const PiecewiseLinear& f) {
  std::vector<std::pair<Rational, Rational>> jumps;
  Rational mass = 0;
  for (const auto& e : events(f)) {
    if (e.kind != EventKind::Pole) continue;
    jumps.emplace_back(e.location, e.multiplicity());
    mass += e.multiplicity();
  }
  // end slopes -mass/2 and mass/2, so -|x| splits as 0 - |x|
  Rational left = -mass / 2;
  PiecewiseLinear g = PiecewiseLinear::from_jumps(left, std::move(jumps), {0, 0});
  PiecewiseLinear h = tplus(f, g);
  return {std::move(h), std::move(g)};
}

PiecewiseLinear tropical_gcd(const PiecewiseLinear& f1, const PiecewiseLinear& f2,
                             const Rational& anchor_value) {
  if (!is_entire(f1)) throw Error(ErrorCode::NotEntire, "tropical_gcd: first argument has a pole", 0);
  if (!is_entire(f2)) throw Error(ErrorCode::NotEntire, "tropical_gcd: second argument has a pole", 1);
  std::vector<std::pair<Rational, Rational>> jumps;
  for (const auto& x : merged_abscissae(f1, f2)) {
    Rational w1 = omega(f1, x);
    Rational w2 = omega(f2, x);
    Rational w = w1 < w2 ? w1 : w2;
    if (w > 0) jumps.emplace_back(x, std::move(w));
  }
  const Rational& left = f1.left_slope() < f2.left_slope() ? f1.left_slope() : f2.left_slope();
  return PiecewiseLinear::from_jumps(left, std::move(jumps), {0, anchor_value});
}

PiecewiseLinear odot(const MaxPlus& a, const PiecewiseLinear& f) {
  if (a.is_bottom()) throw Error(ErrorCode::InvalidArgument, "Bottom (.) f is not a finite function");
  return add_constant(f, a.value());
}

std::optional<PiecewiseLinear> linear_combination(std::span<const MaxPlus> coefficients,
                                                  std::span<const PiecewiseLinear> functions) {
  if (coefficients.size() != functions.size()) {
    throw Error(ErrorCode::DimensionMismatch, "coefficient count differs from function count");
  }
  std::vector<PiecewiseLinear> terms;
  for (std::size_t k = 0; k < functions.size(); ++k) {
    if (coefficients[k].is_finite()) terms.push_back(add_constant(functions[k], coefficients[k].value()));
  }
  if (terms.empty()) return std::nullopt;
  return tmax_all(terms);
}

}  // namespace tropical
