#pragma once

// JSON forms of functions, matrices, curves and second-main-theorem
// instances. Rationals are strings "p/q"; Bottom is "-inf".
//
//   function: {"left_slope", "anchor": [x, y], "breakpoints": [[x, y], ...], "right_slope"}
//   matrix:   {"rows", "cols", "entries": [[...], ...]}
//   curve:    {"coords": [function, ...]}
//   instance: {"basis": curve, "coefficients": matrix, "q", "step"}

#include <nlohmann/json.hpp>

#include "tropical/curves.hpp"
#include "tropical/linalg.hpp"
#include "tropical/piecewise.hpp"
#include "tropical/smt.hpp"

namespace tropical {

using Json = nlohmann::json;

// All readers throw ParseError on malformed input.
Json to_json(const PiecewiseLinear& f);
PiecewiseLinear function_from_json(const Json& j);

Json to_json(const TropicalMatrix& m);
TropicalMatrix matrix_from_json(const Json& j);

Json to_json(const TropicalCurve& c);
TropicalCurve curve_from_json(const Json& j);

Json to_json(const SmtInstance& inst);
SmtInstance instance_from_json(const Json& j);

}  // namespace tropical
