#include "jetapprox/lift.hpp"

#include "jetapprox/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace jetapprox {

LiftResult lift(const Jet& G, const CompactSetDescriptor& set, const Rational& h) {
  const int n = G.order();
  if (n < 1) throw Error(ErrorKind::InvalidParams, "lifting needs a jet of order >= 1");
  if (!poles_within<double>(h, set.finitePoles))
    throw Error(ErrorKind::InvalidParams, "approximant has poles outside the descriptor's pole set");
  const Complex a = set.basePoint;

  auto strip = strip_principal_parts<double>(h, n, set.finitePoles);
  std::vector<Complex> init;
  for (int r = 0; r < n; ++r) init.push_back(G.components[std::size_t(r)](a));

  LiftResult out;
  out.H = nth_primitive<double>(strip.stripped, n, a, init);
  out.stripped = std::move(strip.stripped);
  out.removedCoefficients = std::move(strip.removed);

  Rational d = out.H;
  for (int k = 0; k <= n; ++k) {
    const FunctionOracle& g = G.components[std::size_t(k)];
    double m = 0.0;
    for (const auto& z : set.samples) m = std::max(m, std::abs(evaluate(d, z) - g(z)));
    out.seminormErrors.push_back(m);
    d = differentiate(d);
  }
  for (int k = 0; k < n; ++k) out.inductionBoundChain.push_back(set.connectorBound * out.seminormErrors[std::size_t(k + 1)]);
  return out;
}

InductionCheck induction_bound_check(const LiftResult& res, const Jet& G, const CompactSetDescriptor& set) {
  InductionCheck out;
  out.maxExcess = -std::numeric_limits<double>::infinity();
  Rational d = res.H;
  for (int r = 0; r < G.order(); ++r) {
    const FunctionOracle& g = G.components[std::size_t(r)];
    double m = 0.0;
    for (const auto& b : set.denseSubsetSamples) {
      const double e = std::abs(evaluate(d, b) - g(b));
      m = std::max(m, e);
      out.maxExcess = std::max(out.maxExcess, e - res.inductionBoundChain[std::size_t(r)]);
    }
    out.maxPointwise.push_back(m);
    d = differentiate(d);
  }
  return out;
}

JetApproxRun approximate_jet(const Jet& G, const CompactSetDescriptor& set,
                             const std::vector<ApproxConfig>& schedule, const JetApproxOptions& opt) {
  JetApproxRun run;
  const int n = G.order();
  if (opt.runGate) {
    std::vector<Polyline> curves = set.loops;
    for (const auto& c : set.connectors) curves.push_back(c.path);
    run.gate = gamma_membership(G, curves, default_test_functions(set), opt.threshold, opt.ibp);
    run.gateRan = true;
    if (!run.gate.pass && opt.gate == GateMode::Strict)
      throw Error(ErrorKind::GammaCheckFailed,
                  "jet fails the integration-by-parts check (max defect " + std::to_string(run.gate.maxDefect) + ")");
  }
  const FunctionOracle& top = G.components[std::size_t(n)];
  for (const auto& cfg : schedule) {
    ScheduleEntry e;
    e.config = cfg;
    e.approx = uniform_approx(top, set, cfg);
    e.lift = lift(G, set, e.approx.h);
    const auto metric = d_metric(jet_of(FunctionOracle(e.lift.H), n), G, set, n);
    e.dValue = metric.value;
    e.tailBound = metric.tailBound;
    run.entries.push_back(std::move(e));
  }
  return run;
}

std::vector<ResidueCheckEntry> residue_vanishing_check(const Jet& G, const CompactSetDescriptor& set, double tol) {
  const int n = G.order();
  if (n < 1) throw Error(ErrorKind::InvalidParams, "residue check needs a jet of order >= 1");
  const FunctionOracle& top = G.components[std::size_t(n)];
  std::vector<ResidueCheckEntry> out;
  for (std::size_t i = 0; i < set.loops.size(); ++i) {
    const Complex a = set.finitePoles[i];
    for (int r = 1; r <= n; ++r) {
      const auto v = contour_integral([&](Complex z) { return top(z) * std::pow(z - a, r - 1); }, set.loops[i], tol);
      out.push_back({i, r, v.value});
    }
  }
  return out;
}

double removed_coefficient_bound(const Rational& h, const Jet& G, const CompactSetDescriptor& set,
                                 std::size_t loopId, int r, double tol) {
  const Polyline& loop = set.loops.at(loopId);
  const Complex a = set.finitePoles.at(loopId);
  const FunctionOracle& top = G.components[std::size_t(G.order())];
  const Polyline fine = refined(loop, 8);
  double err = 0.0, weight = 0.0;
  for (const auto& z : fine.vertices) {
    err = std::max(err, std::abs(evaluate(h, z) - top(z)));
    weight = std::max(weight, std::pow(std::abs(z - a), r - 1));
  }
  const Complex exact =
      contour_integral([&](Complex z) { return top(z) * std::pow(z - a, r - 1); }, loop, tol).value;
  return (curve_length(loop) * err * weight + std::abs(exact)) / (2.0 * std::numbers::pi);
}

namespace {

int max_pole_degree(const ApproxConfig& cfg) {
  int d = 0;
  for (const auto& p : cfg.poleDegrees) d = std::max(d, p.degree);
  return d;
}

}  // namespace

void write_csv(std::ostream& os, const JetApproxRun& run) {
  os << "configIndex,degree,poleDegree,k,seminormError,dValue,tailBound\n";
  char buf[160];
  for (std::size_t i = 0; i < run.entries.size(); ++i) {
    const auto& e = run.entries[i];
    for (std::size_t k = 0; k < e.lift.seminormErrors.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%zu,%d,%d,%zu,%.17g,%.17g,%.17g\n", i, e.config.polyDegree, max_pole_degree(e.config), k,
                    e.lift.seminormErrors[k], e.dValue, e.tailBound);
      os << buf;
    }
  }
}

}  // namespace jetapprox
