#include "tropical/json_io.hpp"

#include <string>

#include "tropical/error.hpp"

namespace tropical {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, "malformed JSON: " + what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) malformed(std::string("missing field '") + name + "'");
  return j.at(name);
}

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  malformed("expected a rational string");
}

MaxPlus maxplus_from(const Json& j) {
  if (j.is_string()) return parse_maxplus(j.get<std::string>());
  return MaxPlus(rational_from(j));
}

Point point_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) malformed("a point is a pair [x, y]");
  return {rational_from(j[0]), rational_from(j[1])};
}

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

}  // namespace

Json to_json(const PiecewiseLinear& f) {
  Json pts = Json::array();
  for (const auto& p : f.breakpoints()) pts.push_back(point_json(p));
  return Json{{"left_slope", to_string(f.left_slope())},
              {"anchor", point_json(f.anchor())},
              {"breakpoints", pts},
              {"right_slope", to_string(f.right_slope())}};
}

PiecewiseLinear function_from_json(const Json& j) {
  Rational left = rational_from(field(j, "left_slope"));
  Rational right = rational_from(field(j, "right_slope"));
  Point anchor = point_from(field(j, "anchor"));
  std::vector<Point> pts;
  if (j.contains("breakpoints")) {
    const Json& bp = j.at("breakpoints");
    if (!bp.is_array()) malformed("breakpoints must be an array");
    for (const auto& p : bp) pts.push_back(point_from(p));
  }
  PiecewiseLinear f;
  if (pts.empty()) {
    if (left != right) malformed("a function without breakpoints needs equal end slopes");
    f = PiecewiseLinear::affine(left, anchor.y - left * anchor.x);
  } else {
    try {
      f = PiecewiseLinear::from_points(left, std::move(pts), right);
    } catch (const Error& e) {
      malformed(e.what());
    }
  }
  if (f(anchor.x) != anchor.y) malformed("anchor does not lie on the function");
  return f;
}

Json to_json(const TropicalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(row);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

TropicalMatrix matrix_from_json(const Json& j) {
  const Json& r = field(j, "rows");
  const Json& c = field(j, "cols");
  if (!r.is_number_integer() || !c.is_number_integer() || r.get<long long>() <= 0 || c.get<long long>() <= 0) {
    malformed("rows and cols must be positive integers");
  }
  const std::size_t rows = r.get<std::size_t>();
  const std::size_t cols = c.get<std::size_t>();
  const Json& e = field(j, "entries");
  if (!e.is_array() || e.size() != rows) malformed("entries must hold one array per row");
  std::vector<MaxPlus> entries;
  entries.reserve(rows * cols);
  for (const auto& row : e) {
    if (!row.is_array() || row.size() != cols) malformed("every row needs " + std::to_string(cols) + " entries");
    for (const auto& v : row) entries.push_back(maxplus_from(v));
  }
  return TropicalMatrix(rows, cols, std::move(entries));
}

Json to_json(const TropicalCurve& c) {
  Json coords = Json::array();
  for (const auto& g : c.coordinates()) coords.push_back(to_json(g));
  return Json{{"coords", coords}};
}

TropicalCurve curve_from_json(const Json& j) {
  const Json& coords = field(j, "coords");
  if (!coords.is_array()) malformed("coords must be an array");
  std::vector<PiecewiseLinear> fs;
  for (const auto& g : coords) fs.push_back(function_from_json(g));
  return TropicalCurve::validate_reduced(std::move(fs));
}

Json to_json(const SmtInstance& inst) {
  return Json{{"basis", to_json(inst.basis())},
              {"coefficients", to_json(inst.coefficients())},
              {"q", inst.q()},
              {"step", to_string(inst.step())}};
}

SmtInstance instance_from_json(const Json& j) {
  TropicalCurve basis = curve_from_json(field(j, "basis"));
  TropicalMatrix coeffs = matrix_from_json(field(j, "coefficients"));
  Rational step = j.contains("step") ? rational_from(j.at("step")) : Rational(1);
  if (j.contains("q")) {
    const Json& q = j.at("q");
    if (!q.is_number_integer() || q.get<long long>() < 0 || q.get<std::size_t>() + 1 != coeffs.cols()) {
      malformed("q must equal the coefficient column count minus one");
    }
  }
  return SmtInstance(std::move(basis), std::move(coeffs), std::move(step));
}

}  // namespace tropical
