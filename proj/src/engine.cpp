#include "jetapprox/engine.hpp"

#include "jetapprox/quadrature.hpp"

#include <algorithm>
#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>

namespace jetapprox {
namespace {

constexpr double kRankThreshold = 1e-10;
constexpr double kLaurentTol = 1e-13;

double analytic_radius(const FunctionOracle& g, Complex c) {
  const auto& rep = g.representation();
  if (const auto* r = std::get_if<Rational>(&rep)) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& p : r->poles()) d = std::min(d, std::abs(p - c));
    return d;
  }
  if (const auto* n = std::get_if<NamedAnalytic>(&rep)) {
    switch (n->kind) {
      case NamedKind::ReciprocalShift: return std::abs(n->pole - c);
      case NamedKind::PowerSeries: return n->radius - std::abs(n->center - c);
      default: return std::numeric_limits<double>::infinity();
    }
  }
  if (const auto* s = std::get_if<OracleSum>(&rep)) {
    double d = std::numeric_limits<double>::infinity();
    for (const auto& t : *s->terms) d = std::min(d, analytic_radius(t, c));
    return d;
  }
  throw Error(ErrorKind::NotDifferentiable, "taylor method needs a differentiable oracle");
}

double sample_radius(const CompactSetDescriptor& set, Complex c) {
  double r = 0.0;
  for (const auto& z : set.samples) r = std::max(r, std::abs(z - c));
  return r;
}

void check_poles(const CompactSetDescriptor& set, const ApproxConfig& cfg) {
  for (const auto& pd : cfg.poleDegrees) {
    if (pd.degree < 0) throw Error(ErrorKind::InvalidParams, "pole degrees must be >= 0");
    if (std::find(set.finitePoles.begin(), set.finitePoles.end(), pd.pole) == set.finitePoles.end())
      throw Error(ErrorKind::InvalidParams, "pole degree given for a point outside the descriptor's pole set");
  }
  if (cfg.polyDegree < 0) throw Error(ErrorKind::InvalidParams, "polynomial degree must be >= 0");
}

double sup_error(const Rational& h, const FunctionOracle& g, const CompactSetDescriptor& set) {
  double m = 0.0;
  for (const auto& z : set.samples) m = std::max(m, std::abs(evaluate(h, z) - g(z)));
  return m;
}

ApproxResult taylor(const FunctionOracle& g, const CompactSetDescriptor& set, const ApproxConfig& cfg) {
  if (set.kind != SetKind::Disk) throw Error(ErrorKind::InvalidParams, "taylor method needs a disk-kind set");
  const Complex c = set.basePoint;
  if (!(analytic_radius(g, c) > sample_radius(set, c)))
    throw Error(ErrorKind::InvalidParams, "set is not inside the oracle's disk of convergence");
  const auto coeffs = taylor_coefficients(g, c, cfg.polyDegree);
  ApproxResult out;
  out.h = Rational(from_shifted_basis<double>(coeffs, c));
  out.basisSize = out.rank = cfg.polyDegree + 1;
  return out;
}

ApproxResult laurent(const FunctionOracle& g, const CompactSetDescriptor& set, const ApproxConfig& cfg) {
  if (set.kind != SetKind::Annulus || set.loops.empty())
    throw Error(ErrorKind::InvalidParams, "laurent method needs an annulus-kind set");
  const Complex c = set.finitePoles.front();
  const Polyline& loop = set.loops.front();
  const int negative = cfg.pole_degree(c);
  const Complex twoPiI(0.0, 2.0 * std::numbers::pi);
  auto coefficient = [&](int k) {
    return contour_integral([&](Complex z) { return g(z) * std::pow(z - c, -k - 1); }, loop, kLaurentTol).value /
           twoPiI;
  };
  std::vector<Complex> positive;
  for (int k = 0; k <= cfg.polyDegree; ++k) positive.push_back(coefficient(k));
  PrincipalPartD part{c, {}};
  for (int r = 1; r <= negative; ++r) part.coeffs[r] = coefficient(-r);
  ApproxResult out;
  out.h = Rational(from_shifted_basis<double>(positive, c), {part});
  out.basisSize = out.rank = cfg.basis_size();
  return out;
}

ApproxResult least_squares(const FunctionOracle& g, const CompactSetDescriptor& set, const ApproxConfig& cfg) {
  const int m = cfg.basis_size();
  const auto n = Eigen::Index(set.samples.size());
  if (n < 4 * m)
    throw Error(ErrorKind::InsufficientSamples, "least squares needs at least 4 samples per basis function");

  Eigen::MatrixXcd a(n, m);
  Eigen::VectorXcd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex z = set.samples[std::size_t(i)];
    b(i) = g(z);
    Complex p(1.0);
    for (int k = 0; k <= cfg.polyDegree; ++k, p *= z) a(i, k) = p;
    int col = cfg.polyDegree + 1;
    for (const auto& pd : cfg.poleDegrees) {
      const Complex w = 1.0 / (z - pd.pole);
      Complex q = w;
      for (int r = 1; r <= pd.degree; ++r, q *= w) a(i, col++) = q;
    }
  }
  Eigen::VectorXd scale(m);
  for (int j = 0; j < m; ++j) {
    scale(j) = a.col(j).cwiseAbs().maxCoeff();
    if (scale(j) == 0.0) scale(j) = 1.0;
    a.col(j) /= scale(j);
  }

  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod;
  cod.setThreshold(kRankThreshold);
  cod.compute(a);
  const int rank = int(cod.rank());
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> full(a);
  Eigen::VectorXcd x = full.solve(b);
  for (int j = 0; j < m; ++j) x(j) /= scale(j);

  Poly::Coefficients pc = x.head(cfg.polyDegree + 1);
  std::vector<PrincipalPartD> parts;
  int col = cfg.polyDegree + 1;
  for (const auto& pd : cfg.poleDegrees) {
    PrincipalPartD part{pd.pole, {}};
    for (int r = 1; r <= pd.degree; ++r) part.coeffs[r] = x(col++);
    parts.push_back(std::move(part));
  }
  ApproxResult out;
  out.h = Rational(Poly(std::move(pc)), std::move(parts));
  out.basisSize = m;
  out.rank = rank;
  out.illConditioned = out.rank < m;
  return out;
}

}  // namespace

std::string_view to_string(ApproxMethod m) {
  switch (m) {
    case ApproxMethod::Taylor: return "taylor";
    case ApproxMethod::Laurent: return "laurent";
    case ApproxMethod::LeastSquares: return "least-squares";
  }
  return "least-squares";
}

ApproxMethod parse_approx_method(std::string_view name) {
  for (ApproxMethod m : {ApproxMethod::Taylor, ApproxMethod::Laurent, ApproxMethod::LeastSquares})
    if (to_string(m) == name) return m;
  throw Error(ErrorKind::InvalidParams, "unknown approximation method '" + std::string(name) + "'");
}

int ApproxConfig::basis_size() const {
  int m = polyDegree + 1;
  for (const auto& pd : poleDegrees) m += pd.degree;
  return m;
}

int ApproxConfig::pole_degree(Complex pole) const {
  for (const auto& pd : poleDegrees)
    if (pd.pole == pole) return pd.degree;
  return 0;
}

ApproxResult uniform_approx(const FunctionOracle& g, const CompactSetDescriptor& set, const ApproxConfig& cfg) {
  check_poles(set, cfg);
  ApproxResult out;
  switch (cfg.method) {
    case ApproxMethod::Taylor: out = taylor(g, set, cfg); break;
    case ApproxMethod::Laurent: out = laurent(g, set, cfg); break;
    case ApproxMethod::LeastSquares: out = least_squares(g, set, cfg); break;
  }
  out.supError = sup_error(out.h, g, set);
  return out;
}

std::vector<ApproxConfig> degree_schedule(int start, int stop, int step, const ApproxConfig& base,
                                          ScheduleAxis axis, int polyPerPoleDegree) {
  if (start > stop || step < 1 || start < 0)
    throw Error(ErrorKind::InvalidParams, "schedule needs 0 <= start <= stop and step >= 1");
  std::vector<ApproxConfig> out;
  for (int d = start; d <= stop; d += step) {
    ApproxConfig cfg = base;
    if (axis == ScheduleAxis::Polynomial) {
      cfg.polyDegree = d;
    } else {
      for (auto& pd : cfg.poleDegrees) pd.degree = d;
      cfg.polyDegree = base.polyDegree + polyPerPoleDegree * d;
    }
    out.push_back(std::move(cfg));
  }
  return out;
}

}  // namespace jetapprox
