#include "jetapprox/gamma_check.hpp"

#include "jetapprox/quadrature.hpp"

#include <cmath>
#include <cstdio>

namespace jetapprox {
namespace {

void check_clearance(const Polyline& curve, const Rational& phi, const IbpOptions& opt) {
  const double clearance = opt.clearance.value_or(0.1 * curve_diameter(curve));
  for (const auto& pole : phi.poles())
    if (distance_to_curve(curve, pole) <= clearance)
      throw Error(ErrorKind::PoleTooClose, "test function has a pole within the clearance distance of the curve");
}

}  // namespace

IbpTerms ibp_terms(const Jet& G, int l, const Polyline& curve, const Rational& phi,
                   const IbpOptions& opt) {
  if (l < 0 || l + 1 > G.order())
    throw Error(ErrorKind::InvalidParams, "ibp_defect needs 0 <= l and l + 1 <= jet order");
  check_clearance(curve, phi, opt);
  const FunctionOracle value = G.components[std::size_t(l)];
  const FunctionOracle next = G.components[std::size_t(l + 1)];
  const Rational dphi = differentiate(phi);

  const auto first = contour_integral([&](Complex z) { return evaluate(phi, z) * next(z); }, curve, opt.tol);
  const auto second = contour_integral([&](Complex z) { return value(z) * evaluate(dphi, z); }, curve, opt.tol);
  const Complex a = curve.start();
  const Complex b = curve.end();
  IbpTerms t;
  t.phiTimesNext = first.value;
  t.valueTimesDphi = second.value;
  t.boundary = value(b) * evaluate(phi, b) - value(a) * evaluate(phi, a);
  t.quadratureError = first.errorEstimate + second.errorEstimate;
  return t;
}

double ibp_defect(const Jet& G, int l, const Polyline& curve, const Rational& phi, const IbpOptions& opt) {
  return ibp_terms(G, l, curve, phi, opt).defect();
}

double ibp_defect_closed(const Jet& G, int l, const Polyline& curve, const Rational& phi,
                         const IbpOptions& opt) {
  if (!curve.closed || curve.start() != curve.end())
    throw Error(ErrorKind::CurveNotClosed, "closed-curve defect needs a closed curve");
  const auto t = ibp_terms(G, l, curve, phi, opt);
  return std::abs(t.phiTimesNext + t.valueTimesDphi);
}

std::string_view to_string(GammaVerdict v) {
  switch (v) {
    case GammaVerdict::Consistent: return "consistent with Gamma(K)";
    case GammaVerdict::NotInGamma: return "not in Gamma(K)";
    case GammaVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

DefectReport gamma_membership(const Jet& G, const std::vector<Polyline>& curves,
                              const std::vector<Rational>& phis, double threshold,
                              const IbpOptions& opt) {
  DefectReport report;
  report.threshold = threshold;
  bool disproved = false;
  for (int l = 0; l + 1 <= G.order(); ++l)
    for (std::size_t c = 0; c < curves.size(); ++c)
      for (std::size_t p = 0; p < phis.size(); ++p) {
        const auto t = ibp_terms(G, l, curves[c], phis[p], opt);
        DefectEntry e{l, c, p, t.defect(), t.quadratureError};
        report.maxDefect = std::max(report.maxDefect, e.defect);
        report.maxQuadratureError = std::max(report.maxQuadratureError, e.quadratureError);
        if (e.defect > threshold && e.defect > 10.0 * e.quadratureError) disproved = true;
        report.entries.push_back(e);
      }
  report.pass = report.maxDefect <= threshold;
  report.verdict = report.pass ? GammaVerdict::Consistent
                   : disproved ? GammaVerdict::NotInGamma
                               : GammaVerdict::Inconclusive;
  return report;
}

std::vector<Polyline> default_check_curves(const CompactSetDescriptor& set) {
  std::vector<Polyline> out;
  for (const auto& c : set.connectors) out.push_back(c.path);
  out.insert(out.end(), set.loops.begin(), set.loops.end());
  out.insert(out.end(), set.boundaries.begin(), set.boundaries.end());
  return out;
}

std::vector<Rational> default_test_functions(const CompactSetDescriptor& set) {
  std::vector<Rational> out{Rational(Poly{1.0}), Rational(Poly{0.0, 1.0}), Rational(Poly{0.0, 0.0, 1.0})};
  for (const auto& p : set.finitePoles) out.push_back(Rational::pole_term(p, 1));
  return out;
}

void write_csv(std::ostream& os, const DefectReport& report) {
  os << "l,curve,phi,defect\n";
  char buf[64];
  for (const auto& e : report.entries) {
    std::snprintf(buf, sizeof buf, "%.17g", e.defect);
    os << e.l << ',' << e.curveId << ',' << e.phiId << ',' << buf << '\n';
  }
}

PositionDerivativeResult position_derivative_defect(const Jet& G, int l, const Polyline& curve,
                                                    std::size_t vertexIndex,
                                                    const std::vector<double>& steps) {
  if (l < 0 || l + 1 > G.order())
    throw Error(ErrorKind::InvalidParams, "position derivative needs 0 <= l and l + 1 <= jet order");
  if (vertexIndex >= curve.vertices.size())
    throw Error(ErrorKind::InvalidParams, "vertex index out of range");
  const FunctionOracle value = G.components[std::size_t(l)];
  const FunctionOracle next = G.components[std::size_t(l + 1)];
  const double length = curve_length(curve);
  const double s0 = arclength_to_vertex(curve, vertexIndex);
  const Complex a = curve.vertices[vertexIndex];
  const Complex va = value(a);
  const Complex expected = next(a);

  PositionDerivativeResult out;
  for (double t : steps) {
    double s = s0 + t;
    if (curve.closed)
      s = std::fmod(s, length);
    else if (s > length)
      s = s0 - t;
    const Complex z = point_at_arclength(curve, s);
    const Complex chord = z - a;
    if (chord == Complex(0.0)) throw Error(ErrorKind::DegenerateChord, "zero chord at the requested step");
    const double d = std::abs((value(z) - va) / chord - expected);
    out.defects.push_back(d);
    out.maxDefect = std::max(out.maxDefect, d);
  }
  return out;
}

}  // namespace jetapprox
