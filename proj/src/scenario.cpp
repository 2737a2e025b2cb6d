#include "jetapprox/scenario.hpp"

#include "jetapprox/gamma_check.hpp"
#include "jetapprox/lift.hpp"
#include "jetapprox/random.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace jetapprox {
namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorKind::Validation, what); }

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) invalid(std::string("missing key '") + key + "'");
  return j.at(key);
}

template <typename T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.is_object() || !j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    invalid(std::string("bad value for '") + key + "'");
  }
}

std::vector<Complex> complex_list(const json& j) {
  if (!j.is_array()) invalid("expected an array of complex numbers");
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(parse_complex(e));
  return out;
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

Rational parse_rational(const json& j) {
  Poly poly;
  if (j.contains("poly")) {
    const auto c = complex_list(j.at("poly"));
    poly = Poly::from_span(c);
  }
  std::vector<PrincipalPartD> parts;
  if (j.contains("parts")) {
    for (const auto& p : j.at("parts")) {
      PrincipalPartD part{parse_complex(need(p, "pole")), {}};
      for (const auto& [key, value] : need(p, "coeffs").items()) {
        int r = 0;
        try {
          r = std::stoi(key);
        } catch (const std::exception&) {
          invalid("principal part orders must be integers");
        }
        if (r < 1) invalid("principal part orders must be >= 1");
        part.coeffs[r] = parse_complex(value);
      }
      parts.push_back(std::move(part));
    }
  }
  return Rational(std::move(poly), std::move(parts));
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Outputs {
  std::filesystem::path csv;
  std::filesystem::path summary;
};

Outputs output_paths(const json& scenario, const RunOptions& opt) {
  Outputs o;
  const json out = scenario.value("output", json::object());
  if (opt.out)
    o.csv = *opt.out;
  else if (out.contains("csv"))
    o.csv = out.at("csv").get<std::string>();
  else
    invalid("no CSV output path: pass --out or set output.csv");
  if (!opt.out && out.contains("summary"))
    o.summary = out.at("summary").get<std::string>();
  else
    o.summary = std::filesystem::path(o.csv).replace_extension(".summary.json");
  return o;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Validation, "cannot open output file " + path.string());
  f << text;
}

struct Result {
  std::string csv;
  json summary;
  int code = kExitOk;
};

Result run_approx_jet(const json& sc, std::mt19937_64& rng, bool verbose, std::ostream& err) {
  const auto set = parse_set(need(sc, "set"));
  const Jet jet = parse_jet(need(sc, "jet"), &set, &rng);
  const json& sched = need(sc, "schedule");
  ApproxConfig base;
  base.method = parse_approx_method(get_or<std::string>(sched, "method", "least-squares"));
  base.polyDegree = get_or<int>(sched, "polyDegree", 0);
  if (sched.contains("poleDegrees"))
    for (const auto& pd : sched.at("poleDegrees"))
      base.poleDegrees.push_back({parse_complex(need(pd, "pole")), get_or<int>(pd, "degree", 0)});
  const std::string axisName = get_or<std::string>(sched, "axis", "polynomial");
  if (axisName != "polynomial" && axisName != "poles") invalid("schedule.axis must be 'polynomial' or 'poles'");
  const auto axis = axisName == "poles" ? ScheduleAxis::Poles : ScheduleAxis::Polynomial;
  const auto schedule = degree_schedule(get_or<int>(sched, "from", 0), get_or<int>(sched, "to", 0),
                                        get_or<int>(sched, "step", 1), base, axis,
                                        get_or<int>(sched, "polyPerPoleDegree", 0));
  const json check = sc.value("check", json::object());
  JetApproxOptions opt;
  opt.threshold = get_or<double>(check, "threshold", 1e-6);
  opt.runGate = get_or<bool>(check, "gate", true);
  const bool failOnDefect = get_or<bool>(check, "failOnDefect", false);
  opt.gate = GateMode::WarnAndContinue;

  const auto run = approximate_jet(jet, set, schedule, opt);
  if (verbose && run.gateRan)
    err << json{{"info", "gate"}, {"maxDefect", run.gate.maxDefect}, {"verdict", to_string(run.gate.verdict)}}.dump()
        << '\n';

  Result r;
  std::ostringstream csv;
  write_csv(csv, run);
  r.csv = csv.str();
  json entries = json::array();
  bool ill = false;
  for (std::size_t i = 0; i < run.entries.size(); ++i) {
    const auto& e = run.entries[i];
    ill = ill || e.approx.illConditioned;
    json removed = json::array();
    for (const auto& t : e.lift.removedCoefficients)
      removed.push_back({{"pole", complex_json(t.pole)}, {"r", t.order}, {"coefficient", complex_json(t.coefficient)}});
    entries.push_back({{"configIndex", i},
                       {"polyDegree", e.config.polyDegree},
                       {"basisSize", e.approx.basisSize},
                       {"rank", e.approx.rank},
                       {"illConditioned", e.approx.illConditioned},
                       {"supError", e.approx.supError},
                       {"seminormErrors", e.lift.seminormErrors},
                       {"inductionBoundChain", e.lift.inductionBoundChain},
                       {"removedCoefficients", removed},
                       {"dValue", e.dValue},
                       {"tailBound", e.tailBound}});
  }
  r.summary = {{"experiment", "approx-jet"}, {"entries", entries}};
  if (run.gateRan)
    r.summary["gate"] = {{"maxDefect", run.gate.maxDefect},
                         {"pass", run.gate.pass},
                         {"threshold", run.gate.threshold},
                         {"verdict", to_string(run.gate.verdict)}};
  if (ill && get_or<bool>(sched, "failOnIllConditioned", false)) r.code = kExitNumerical;
  if (failOnDefect && run.gateRan && !run.gate.pass) r.code = kExitDefect;
  return r;
}

Result run_gamma_check(const json& sc, std::mt19937_64& rng) {
  const auto set = parse_set(need(sc, "set"));
  const Jet jet = parse_jet(need(sc, "jet"), &set, &rng);
  const json check = sc.value("check", json::object());
  std::vector<Rational> phis;
  if (check.contains("phis"))
    for (const auto& p : check.at("phis")) phis.push_back(parse_rational(p));
  else
    phis = default_test_functions(set);
  IbpOptions ibp;
  ibp.tol = get_or<double>(check, "tol", 1e-10);
  const auto report = gamma_membership(jet, default_check_curves(set), phis, get_or<double>(check, "threshold", 1e-6), ibp);

  Result r;
  std::ostringstream csv;
  write_csv(csv, report);
  r.csv = csv.str();
  r.summary = {{"experiment", "gamma-check"},
               {"maxDefect", report.maxDefect},
               {"maxQuadratureError", report.maxQuadratureError},
               {"threshold", report.threshold},
               {"pass", report.pass},
               {"verdict", to_string(report.verdict)},
               {"entries", report.entries.size()}};
  if (get_or<bool>(check, "failOnDefect", false) && !report.pass) r.code = kExitDefect;
  return r;
}

Result run_countable(const json& sc, std::mt19937_64& rng) {
  json setSpec = sc.value("set", json{{"kind", "countable"}});
  const auto set = parse_set(setSpec);
  CountableTarget target;
  target.points = set.samples;
  for (const auto& t : need(sc, "targets")) target.targets.push_back(parse_oracle(t, &set, &rng));
  const json sched = sc.value("schedule", json::object());
  const int from = get_or<int>(sched, "from", 1), to = get_or<int>(sched, "to", from), step = get_or<int>(sched, "step", 1);
  if (from < 1 || to < from || step < 1) invalid("countable schedule needs 1 <= from <= to and step >= 1");

  std::vector<CountableRow> rows;
  for (int k = from; k <= to; k += step) rows.push_back({k, locally_polynomial_approx(target, k)});
  Result r;
  std::ostringstream csv;
  write_csv(csv, rows);
  r.csv = csv.str();
  json table = json::array();
  for (const auto& row : rows)
    table.push_back({{"k", row.k}, {"disks", row.approx.h.pieces.size()}, {"errorTable", row.approx.errorTable}, {"bound", 1.0 / row.k}});
  r.summary = {{"experiment", "countable"}, {"points", target.points.size()}, {"rows", table}};
  return r;
}

Result run_metric(const json& sc, std::mt19937_64& rng) {
  const auto set = parse_set(need(sc, "set"));
  const Jet a = parse_jet(need(sc, "jet"), &set, &rng);
  const Jet b = parse_jet(need(sc, "other"), &set, &rng);
  const auto m = d_metric(a, b, set, get_or<int>(sc, "nMax", 20));
  Result r;
  std::ostringstream csv;
  csv << "k,seminorm,term\n";
  for (std::size_t k = 0; k < m.seminorms.size(); ++k) {
    const double s = m.seminorms[k];
    csv << k << ',' << format_double(s) << ',' << format_double(std::ldexp(s / (1.0 + s), -int(k))) << '\n';
  }
  r.csv = csv.str();
  r.summary = {{"experiment", "metric"}, {"value", m.value}, {"tailBound", m.tailBound}, {"seminorms", m.seminorms}};
  return r;
}

Polyline parse_curve(const json& j) {
  if (j.contains("circle")) {
    const json& c = j.at("circle");
    return circle_polygon(parse_complex(c.value("center", json::array({0.0, 0.0}))), get_or<double>(c, "radius", 1.0),
                          get_or<int>(c, "sides", 64), 0.0, get_or<int>(c, "turns", 1));
  }
  return make_polyline(complex_list(need(j, "vertices")), get_or<bool>(j, "closed", false));
}

Result run_winding(const json& sc) {
  const Polyline curve = parse_curve(need(sc, "curve"));
  const double tol = get_or<double>(sc, "tol", 1e-6);
  Result r;
  std::ostringstream csv;
  csv << "re,im,winding,residual\n";
  json rows = json::array();
  for (const auto& p : complex_list(need(sc, "points"))) {
    const Complex v = winding_value(curve, p);
    const int w = winding_number(curve, p, tol);
    const double residual = std::abs(v - double(w));
    csv << format_double(p.real()) << ',' << format_double(p.imag()) << ',' << w << ',' << format_double(residual) << '\n';
    rows.push_back({{"point", complex_json(p)}, {"winding", w}, {"residual", residual}});
  }
  r.csv = csv.str();
  r.summary = {{"experiment", "winding"}, {"rows", rows}};
  return r;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation:
    case ErrorKind::InvalidParams:
    case ErrorKind::NotTabulated:
    case ErrorKind::NotDifferentiable:
    case ErrorKind::CurveNotClosed:
      return kExitValidation;
    case ErrorKind::GammaCheckFailed:
      return kExitDefect;
    default:
      return kExitNumerical;
  }
}

void report_error(std::ostream& err, std::string_view kind, const std::string& message, int code) {
  err << json{{"error", kind}, {"message", message}, {"exitCode", code}}.dump() << '\n';
}

}  // namespace

Complex parse_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  invalid("complex numbers are a number or a [re, im] pair");
}

CompactSetDescriptor parse_set(const json& j) {
  const SetKind kind = parse_set_kind(get_or<std::string>(j, "kind", ""));
  SetParams p;
  if (j.contains("center")) p.center = parse_complex(j.at("center"));
  p.radius = get_or<double>(j, "radius", p.radius);
  p.innerRadius = get_or<double>(j, "innerRadius", p.innerRadius);
  if (j.contains("center2")) p.center2 = parse_complex(j.at("center2"));
  p.radius2 = get_or<double>(j, "radius2", p.radius2);
  p.samples = get_or<int>(j, "samples", p.samples);
  p.nMax = get_or<int>(j, "nMax", p.nMax);
  p.loopSides = get_or<int>(j, "loopSides", p.loopSides);
  if (j.contains("points")) {
    auto pts = complex_list(j.at("points"));
    if (kind == SetKind::Segment) {
      if (pts.size() != 2) invalid("segment 'points' must hold the two endpoints");
      p.segmentStart = pts[0];
      p.segmentEnd = pts[1];
    } else {
      p.points = std::move(pts);
    }
  }
  return make_set(kind, p);
}

FunctionOracle parse_oracle(const json& j, const CompactSetDescriptor* set, std::mt19937_64* rng) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "exp") return FunctionOracle::exp();
    if (name == "sin") return FunctionOracle::sin();
    if (name == "cos") return FunctionOracle::cos();
    if (name == "zero") return FunctionOracle::constant(0.0);
    invalid("unknown oracle '" + name + "'");
  }
  const std::string kind = get_or<std::string>(j, "kind", "");
  const Complex scale = j.contains("scale") ? parse_complex(j.at("scale")) : Complex(1.0);
  const Complex rate = j.contains("rate") ? parse_complex(j.at("rate")) : Complex(1.0);
  if (kind == "exp") return FunctionOracle::exp(scale, rate);
  if (kind == "sin") return FunctionOracle::sin(scale, rate);
  if (kind == "cos") return FunctionOracle::cos(scale, rate);
  if (kind == "constant") return FunctionOracle::constant(parse_complex(need(j, "value")));
  if (kind == "reciprocal-shift") return FunctionOracle::reciprocal_shift(parse_complex(need(j, "pole")), scale);
  if (kind == "power-series")
    return FunctionOracle::power_series(complex_list(need(j, "coeffs")),
                                        parse_complex(j.value("center", json::array({0.0, 0.0}))),
                                        get_or<double>(j, "radius", std::numeric_limits<double>::infinity()));
  if (kind == "rational") return FunctionOracle(parse_rational(j));
  if (kind == "sum") {
    std::vector<FunctionOracle> terms;
    for (const auto& t : need(j, "terms")) terms.push_back(parse_oracle(t, set, rng));
    return FunctionOracle::sum(std::move(terms));
  }
  if (kind == "tabulated") {
    const auto values = complex_list(need(j, "values"));
    if (j.contains("points")) return FunctionOracle::tabulated(complex_list(j.at("points")), values);
    if (!set) invalid("tabulated oracle without 'points' needs a set");
    return FunctionOracle::tabulated(set->samples, values);
  }
  if (kind == "random-rational") {
    if (!rng) invalid("random-rational oracle needs a seeded generator");
    RandomRationalSpec spec;
    spec.maxPoles = get_or<int>(j, "maxPoles", spec.maxPoles);
    spec.maxPoleOrder = get_or<int>(j, "maxPoleOrder", spec.maxPoleOrder);
    spec.maxPolyDegree = get_or<int>(j, "maxPolyDegree", spec.maxPolyDegree);
    spec.poleRadius = get_or<double>(j, "poleRadius", spec.poleRadius);
    return FunctionOracle(random_rational<double>(*rng, spec));
  }
  invalid("unknown oracle kind '" + kind + "'");
}

Jet parse_jet(const json& j, const CompactSetDescriptor* set, std::mt19937_64* rng) {
  if (j.contains("components")) {
    std::vector<FunctionOracle> comps;
    for (const auto& c : j.at("components")) comps.push_back(parse_oracle(c, set, rng));
    if (comps.empty()) invalid("jet 'components' must not be empty");
    return jet_from_components(std::move(comps));
  }
  return jet_of(parse_oracle(need(j, "oracle"), set, rng), get_or<int>(j, "order", 0));
}

int run(const std::string& command, const RunOptions& opt, std::ostream& err) {
  static const char* commands[] = {"approx-jet", "countable", "gamma-check", "metric", "winding"};
  if (std::find(std::begin(commands), std::end(commands), command) == std::end(commands)) {
    report_error(err, "Validation", "unknown command '" + command + "'", kExitValidation);
    return kExitValidation;
  }
  try {
    json sc;
    {
      std::ifstream f(opt.scenario);
      if (!f) invalid("cannot read scenario file " + opt.scenario.string());
      try {
        sc = json::parse(f);
      } catch (const json::parse_error& e) {
        invalid(std::string("malformed scenario JSON: ") + e.what());
      }
    }
    if (!sc.is_object()) invalid("scenario must be a JSON object");
    if (sc.contains("experiment") && sc.at("experiment") != command)
      invalid("scenario experiment '" + sc.at("experiment").get<std::string>() + "' does not match command '" + command + "'");
    const Outputs out = output_paths(sc, opt);
    const std::uint64_t seed = opt.seed.value_or(get_or<std::uint64_t>(sc, "seed", 0));
    std::mt19937_64 rng(seed);

    Result r;
    if (command == "approx-jet")
      r = run_approx_jet(sc, rng, opt.verbose, err);
    else if (command == "gamma-check")
      r = run_gamma_check(sc, rng);
    else if (command == "countable")
      r = run_countable(sc, rng);
    else if (command == "metric")
      r = run_metric(sc, rng);
    else
      r = run_winding(sc);
    r.summary["seed"] = seed;
    r.summary["exitCode"] = r.code;
    write_file(out.csv, r.csv);
    write_file(out.summary, r.summary.dump(2) + "\n");
    if (opt.verbose) err << json{{"info", "done"}, {"csv", out.csv.string()}, {"summary", out.summary.string()}}.dump() << '\n';
    if (r.code == kExitDefect) report_error(err, "GammaCheckFailed", "integration-by-parts defect above threshold", r.code);
    if (r.code == kExitNumerical) report_error(err, "IllConditioned", "least-squares rank deficiency", r.code);
    return r.code;
  } catch (const Error& e) {
    const int code = exit_code_for(e.kind());
    report_error(err, to_string(e.kind()), e.what(), code);
    return code;
  } catch (const json::exception& e) {
    report_error(err, "Validation", e.what(), kExitValidation);
    return kExitValidation;
  }
}

}  // namespace jetapprox
