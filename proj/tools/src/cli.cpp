#include "trop/cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "tropical/casoratian.hpp"
#include "tropical/curves.hpp"
#include "tropical/error.hpp"
#include "tropical/json_io.hpp"
#include "tropical/linalg.hpp"
#include "tropical/nevanlinna.hpp"
#include "tropical/smt.hpp"
#include "tropical/span.hpp"
#include "trop/dsl.hpp"

namespace trop {

using namespace tropical;

namespace {

struct Options {
  std::string emit = "json";
  std::optional<int> digits;
  bool exact = false;
};

class Formatter {
 public:
  explicit Formatter(const Options& o) : digits_(o.exact || !o.digits ? -1 : *o.digits) {}

  std::string operator()(const Rational& v) const { return digits_ >= 0 ? to_decimal(v, digits_) : to_string(v); }
  std::string operator()(const MaxPlus& v) const { return v.is_bottom() ? "-inf" : (*this)(v.value()); }

 private:
  int digits_;  // -1: exact
};

// A cell is either text or a number awaiting formatting.
using Cell = std::variant<std::string, Rational, MaxPlus, bool, std::size_t>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& c, const Formatter& fmt) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* r = std::get_if<Rational>(&c)) return fmt(*r);
  if (const auto* m = std::get_if<MaxPlus>(&c)) return fmt(*m);
  if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
  return std::to_string(std::get<std::size_t>(c));
}

Json cell_json(const Cell& c, const Formatter& fmt) {
  if (const auto* b = std::get_if<bool>(&c)) return *b;
  if (const auto* n = std::get_if<std::size_t>(&c)) return *n;
  return cell_text(c, fmt);
}

Json table_json(const Table& t, const Formatter& fmt) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < t.header.size(); ++i) obj[t.header[i]] = cell_json(row[i], fmt);
    rows.push_back(std::move(obj));
  }
  return rows;
}

void write_csv(std::ostream& out, const Table& t, const Formatter& fmt) {
  for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i], fmt);
    out << '\n';
  }
}

// What a subcommand produced: a table, free-form JSON, or both.
struct Output {
  std::optional<Table> table;
  Json json;
  int status = kExitOk;
};

void emit(std::ostream& out, const Output& o, const Options& opts) {
  Formatter fmt(opts);
  if (opts.emit == "csv" && o.table) {
    write_csv(out, *o.table, fmt);
    return;
  }
  Json doc = o.json;
  if (o.table) {
    if (doc.is_null()) {
      doc = table_json(*o.table, fmt);
    } else {
      doc["rows"] = table_json(*o.table, fmt);
    }
  }
  out << doc.dump(2) << '\n';
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty list");
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

// pieces of f as (from, to, slope, intercept); "-inf"/"inf" at the ends
Table pieces_table(const PiecewiseLinear& f) {
  Table t{{"from", "to", "slope", "intercept"}, {}};
  auto bp = f.breakpoints();
  auto slopes = f.piece_slopes();
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    Point p = bp.empty() ? f.anchor() : (i < bp.size() ? bp[i] : bp[i - 1]);
    Rational intercept = p.y - slopes[i] * p.x;
    Cell from = i == 0 ? Cell(std::string("-inf")) : Cell(bp[i - 1].x);
    Cell to = i == bp.size() ? Cell(std::string("inf")) : Cell(bp[i].x);
    t.rows.push_back({from, to, slopes[i], intercept});
  }
  return t;
}

Json function_json(const PiecewiseLinear& f, const Formatter& fmt, bool exact_only) {
  if (exact_only) return to_json(f);
  Json j = to_json(f);
  Json bps = Json::array();
  for (const auto& p : f.breakpoints()) bps.push_back({fmt(p.x), fmt(p.y)});
  j["left_slope"] = fmt(f.left_slope());
  j["right_slope"] = fmt(f.right_slope());
  j["anchor"] = {fmt(f.anchor().x), fmt(f.anchor().y)};
  j["breakpoints"] = bps;
  return j;
}

std::string engine_name(DeterminantEngine e) { return e == DeterminantEngine::Permutation ? "perm" : "assign"; }

// random reduced basis and coefficient matrix; dependent draws are skipped
std::optional<SmtInstance> random_instance(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  std::size_t n = static_cast<std::size_t>(pick(1, 2));
  std::size_t q = n + static_cast<std::size_t>(pick(1, 2));
  std::vector<PiecewiseLinear> coords;
  for (std::size_t j = 0; j <= n; ++j) {
    std::vector<TropicalTerm> lines;
    int k = pick(1, 3);
    for (int i = 0; i < k; ++i) lines.push_back({rational(pick(-6, 6), 2), Rational(pick(-2, 2))});
    coords.push_back(upper_envelope(lines));
  }
  std::vector<MaxPlus> entries;
  for (std::size_t i = 0; i < (n + 1) * (q + 1); ++i) {
    entries.push_back(pick(0, 3) == 0 ? MaxPlus::bottom() : MaxPlus::finite(rational(pick(-4, 4), 2)));
  }
  try {
    return SmtInstance(validate_reduced(std::move(coords)), TropicalMatrix(n + 1, q + 1, std::move(entries)));
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("TROP_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("TROP_SEED is not an unsigned integer: '") + s + "'");
    }
  }
  return 20240611;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tropical Nevanlinna-Cartan computations", "trop"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--emit", opts.emit, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--digits", opts.digits, "render rationals as decimals with N digits")->check(CLI::NonNegativeNumber);
  app.add_flag("--exact", opts.exact, "render rationals as p/q (default)");

  std::function<Output()> action;

  std::string fn, radii_text, at_text, r_text, lo_text, hi_text, step_text = "1", values_text;
  std::string matrix_path, entries_text, engine_text = "assign", curve_path, instance_path;
  std::vector<std::string> basis_exprs, coord_exprs, fn_list, function_paths;
  bool emit_pieces = false;
  std::size_t random_count = 0;

  auto fn_option = [&](CLI::App* sub) { sub->add_option("--fn", fn, "function expression")->required(); };

  auto* eval = app.add_subcommand("eval", "evaluate a function at points");
  fn_option(eval);
  eval->add_option("--at", at_text, "comma separated abscissae")->required();
  eval->callback([&] {
    action = [&] {
      PiecewiseLinear f = parse_function(fn);
      Table t{{"x", "f"}, {}};
      for (const auto& x : parse_list(at_text)) t.rows.push_back({x, f(x)});
      return Output{t, {}};
    };
  });

  auto* ev = app.add_subcommand("events", "roots and poles of a function");
  fn_option(ev);
  ev->add_option("--lo", lo_text, "window start");
  ev->add_option("--hi", hi_text, "window end");
  ev->callback([&] {
    action = [&] {
      PiecewiseLinear f = parse_function(fn);
      std::vector<RootPoleEvent> es = events(f);
      if (!lo_text.empty() || !hi_text.empty()) {
        if (lo_text.empty() || hi_text.empty()) throw Error(ErrorCode::InvalidArgument, "--lo and --hi go together");
        es = events(f, parse_rational(lo_text), parse_rational(hi_text));
      }
      Table t{{"location", "omega", "kind", "multiplicity"}, {}};
      for (const auto& e : es) {
        t.rows.push_back({e.location, e.omega, std::string(e.kind == EventKind::Root ? "root" : "pole"),
                          e.multiplicity()});
      }
      return Output{t, {}};
    };
  });

  auto* ch = app.add_subcommand("char", "proximity, counting and characteristic functions");
  fn_option(ch);
  ch->add_option("--radii", radii_text, "comma separated radii")->required();
  ch->callback([&] {
    action = [&] {
      PiecewiseLinear f = parse_function(fn);
      std::vector<Rational> radii = parse_list(radii_text);
      Table t{{"r", "m", "N", "T"}, {}};
      for (const auto& s : characteristic_sweep(f, radii)) t.rows.push_back({s.r, s.m, s.N, s.T});
      return Output{t, {}};
    };
  });

  auto* jn = app.add_subcommand("jensen", "Jensen residual T(r,f) - T(r,-f) - f(0)");
  fn_option(jn);
  auto* jr = jn->add_option("--r", r_text, "radius");
  jn->add_option("--radii", radii_text, "comma separated radii")->excludes(jr);
  jn->callback([&] {
    action = [&] {
      PiecewiseLinear f = parse_function(fn);
      std::vector<Rational> radii = parse_list(!r_text.empty() ? r_text : radii_text);
      Output o{Table{{"r", "residual"}, {}}, {}};
      for (const auto& r : radii) {
        Rational res = jensen_residual(f, r);
        if (res != 0) o.status = kExitAssertion;
        o.table->rows.push_back({r, res});
      }
      return o;
    };
  });

  auto* det = app.add_subcommand("det", "tropical determinant");
  auto* mopt = det->add_option("--matrix", matrix_path, "matrix JSON file");
  det->add_option("--entries", entries_text, "rows separated by ';', entries by ','")->excludes(mopt);
  det->add_option("--engine", engine_text, "perm or assign")->check(CLI::IsMember({"perm", "assign"}));
  det->callback([&] {
    action = [&] {
      std::optional<TropicalMatrix> m;
      if (!matrix_path.empty()) {
        m = matrix_from_json(read_json_file(matrix_path));
      } else if (!entries_text.empty()) {
        std::vector<MaxPlus> entries;
        std::size_t rows = 0, cols = 0;
        std::stringstream rs(entries_text);
        std::string row;
        while (std::getline(rs, row, ';')) {
          std::stringstream cs(row);
          std::string item;
          std::size_t count = 0;
          while (std::getline(cs, item, ',')) {
            entries.push_back(parse_maxplus(item));
            ++count;
          }
          if (rows == 0) cols = count;
          if (count != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows", rows);
          ++rows;
        }
        m = TropicalMatrix(rows, cols, std::move(entries));
      } else {
        throw Error(ErrorCode::InvalidArgument, "det needs --matrix or --entries");
      }
      DeterminantEngine engine = engine_text == "perm" ? DeterminantEngine::Permutation : DeterminantEngine::Assignment;
      OptimalAssignment a = optimal_assignment(*m, engine);
      Formatter fmt(opts);
      Json j = {{"engine", engine_name(engine)}, {"determinant", fmt(a.weight)}, {"permutation", a.permutation}};
      std::string perm;
      for (std::size_t i = 0; i < a.permutation.size(); ++i) perm += (i ? " " : "") + std::to_string(a.permutation[i]);
      Output o{Table{{"engine", "determinant", "permutation"}, {{engine_name(engine), a.weight, perm}}}, j};
      if (opts.emit == "json") o.table.reset();
      return o;
    };
  });

  auto* sp = app.add_subcommand("span", "membership of a function in a tropical span");
  fn_option(sp);
  sp->add_option("--basis", basis_exprs, "basis function expression (repeatable)")->required();
  sp->callback([&] {
    action = [&] {
      PiecewiseLinear f = parse_function(fn);
      std::vector<PiecewiseLinear> fs;
      for (const auto& e : basis_exprs) fs.push_back(parse_function(e));
      SpanBasis basis(std::move(fs));
      Formatter fmt(opts);
      Json j = Json::object();
      auto coeffs = span_membership(f, basis);
      j["member"] = coeffs.has_value();
      if (coeffs) {
        Json cs = Json::array();
        for (const auto& c : *coeffs) cs.push_back(fmt(c));
        j["coefficients"] = cs;
        j["length"] = shortest_length(f, basis);
        j["complete"] = is_complete(f, basis);
      }
      return Output{std::nullopt, j};
    };
  });

  auto* ca = app.add_subcommand("cartan", "Cartan characteristic of a curve");
  auto* copt = ca->add_option("--curve", curve_path, "curve JSON file");
  ca->add_option("--coord", coord_exprs, "coordinate expression (repeatable)")->excludes(copt);
  ca->add_option("--radii", radii_text, "comma separated radii")->required();
  ca->callback([&] {
    action = [&] {
      std::optional<TropicalCurve> curve;
      if (!curve_path.empty()) {
        curve = curve_from_json(read_json_file(curve_path));
      } else {
        std::vector<PiecewiseLinear> cs;
        for (const auto& e : coord_exprs) cs.push_back(parse_function(e));
        curve = validate_reduced(std::move(cs));
      }
      Table t{{"r", "T"}, {}};
      for (const auto& r : parse_list(radii_text)) {
        CartanSample s = cartan_characteristic(*curve, r);
        t.rows.push_back({s.r, s.T});
      }
      return Output{t, {}};
    };
  });

  auto* cs = app.add_subcommand("casoratian", "tropical Casoratian of entire functions");
  auto* fopt = cs->add_option("--functions", function_paths, "function JSON files");
  cs->add_option("--fn", fn_list, "function expression (repeatable)")->excludes(fopt);
  cs->add_option("--step", step_text, "shift step c");
  cs->add_flag("--emit-pieces", emit_pieces, "list the linear pieces");
  cs->callback([&] {
    action = [&] {
      CasoratiSpec spec;
      for (const auto& p : function_paths) spec.functions.push_back(function_from_json(read_json_file(p)));
      for (const auto& e : fn_list) spec.functions.push_back(parse_function(e));
      if (spec.functions.empty()) throw Error(ErrorCode::InvalidArgument, "casoratian needs --functions or --fn");
      spec.step = parse_rational(step_text);
      PiecewiseLinear c = casoratian(spec);
      Formatter fmt(opts);
      Json j = {{"casoratian", function_json(c, fmt, !opts.digits || opts.exact)}};
      Table ev_table{{"location", "omega", "kind"}, {}};
      Json evs = Json::array();
      for (const auto& e : events(c)) {
        evs.push_back({{"location", fmt(e.location)},
                       {"omega", fmt(e.omega)},
                       {"kind", e.kind == EventKind::Root ? "root" : "pole"}});
      }
      j["events"] = evs;
      Output o{std::nullopt, j};
      if (emit_pieces) {
        Table t = pieces_table(c);
        if (opts.emit == "csv") {
          o.table = t;
        } else {
          o.json["pieces"] = table_json(t, fmt);
        }
      }
      return o;
    };
  });

  auto* sm = app.add_subcommand("smt-check", "both sides of the Cartan-type second main theorem");
  auto* iopt = sm->add_option("--instance", instance_path, "instance JSON file");
  sm->add_option("--random", random_count, "check N random instances seeded by TROP_SEED")->excludes(iopt);
  sm->add_option("--radii", radii_text, "comma separated radii")->required();
  sm->callback([&] {
    action = [&] {
      std::vector<Rational> radii = parse_list(radii_text);
      std::vector<SmtInstance> instances;
      if (!instance_path.empty()) {
        instances.push_back(instance_from_json(read_json_file(instance_path)));
      } else if (random_count > 0) {
        std::mt19937_64 rng(seed_from_env());
        while (instances.size() < random_count) {
          if (auto inst = random_instance(rng)) instances.push_back(std::move(*inst));
        }
      } else {
        throw Error(ErrorCode::InvalidArgument, "smt-check needs --instance or --random");
      }
      Output o;
      Table t;
      for (std::size_t k = 0; k < instances.size(); ++k) {
        for (const auto& r : radii) {
          SmtReport rep = theorem62_report(instances[k], r);
          if (t.header.empty()) {
            t.header = {"instance", "r", "lhs", "rhs", "holds", "witness", "lambda"};
            for (const auto& [name, v] : rep.components) t.header.push_back(name);
          }
          bool holds = rep.lhs <= rep.rhs;
          std::vector<Cell> row{k, rep.r, rep.lhs, rep.rhs, holds, rep.witness_holds, rep.lambda};
          for (const auto& [name, v] : rep.components) row.emplace_back(v);
          t.rows.push_back(std::move(row));
          if (!rep.witness_holds) o.status = kExitAssertion;
          if (!holds) {
            if (r >= 1) {
              o.status = kExitAssertion;
            } else {
              err << "warning: instance " << k << " violates the inequality at r = " << to_string(r) << '\n';
            }
          }
        }
      }
      o.table = std::move(t);
      return o;
    };
  });

  auto* c7 = app.add_subcommand("cor72", "one-dimensional second main theorem for finitely many values");
  fn_option(c7);
  c7->add_option("--values", values_text, "comma separated values a_k")->required();
  c7->add_option("--radii", radii_text, "comma separated radii")->required();
  c7->callback([&] {
    action = [&] {
      PiecewiseLinear f = parse_function(fn);
      std::vector<Rational> values = parse_list(values_text);
      Table t{{"r", "T", "qT", "sum_N", "residual"}, {}};
      for (const auto& r : parse_list(radii_text)) {
        Cor72Report rep = corollary72_report(f, values, r);
        t.rows.push_back({rep.r, rep.characteristic, rep.q_times_T, rep.sum_root_counting, rep.residual});
      }
      return Output{t, {}};
    };
  });

  auto* ex = app.add_subcommand("example65", "reproduce the two-polynomial Casoratian example");
  ex->add_option("--step", step_text, "shift step c");
  ex->callback([&] {
    action = [&] {
      auto [f0, f1] = example65_functions();
      Example65Record rec = example65_verify(f0, f1, parse_rational(step_text));
      Formatter fmt(opts);
      Json checks = Json::array();
      for (const auto& c : rec.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      Json j = {{"step", fmt(rec.step)},
                {"applicable", rec.applicable},
                {"passed", rec.passed()},
                {"f0", to_json(f0)},
                {"f1", to_json(f1)},
                {"casoratian", to_json(rec.casoratian)},
                {"pieces", table_json(pieces_table(rec.casoratian), fmt)},
                {"checks", checks}};
      Output o{std::nullopt, j};
      if (rec.applicable && !rec.passed()) o.status = kExitAssertion;
      return o;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: Usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    Output o = action();
    emit(out, o, opts);
    return o.status;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace trop
