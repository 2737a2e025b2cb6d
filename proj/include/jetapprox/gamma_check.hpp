#pragma once

#include "jetapprox/geometry.hpp"
#include "jetapprox/jet.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace jetapprox {

struct IbpOptions {
  double tol = 1e-10;                   // quadrature tolerance
  std::optional<double> clearance;      // default: 0.1 * curve diameter
};

/// The pieces of the integration-by-parts identity on one curve.
struct IbpTerms {
  Complex phiTimesNext;   // \int phi g_{l+1}
  Complex boundary;       // g_l(b) phi(b) - g_l(a) phi(a)
  Complex valueTimesDphi; // \int g_l phi'
  double quadratureError = 0.0;

  double defect() const { return std::abs(phiTimesNext - boundary + valueTimesDphi); }
};

IbpTerms ibp_terms(const Jet& G, int l, const Polyline& curve, const Rational& phi,
                   const IbpOptions& opt = {});

/// |\int phi g_{l+1} - [g_l phi]_a^b + \int g_l phi'| along the curve.
double ibp_defect(const Jet& G, int l, const Polyline& curve, const Rational& phi,
                  const IbpOptions& opt = {});

/// Closed-curve form: the boundary terms are dropped, |\int phi g_{l+1} + \int g_l phi'|.
double ibp_defect_closed(const Jet& G, int l, const Polyline& curve, const Rational& phi,
                         const IbpOptions& opt = {});

enum class GammaVerdict { Consistent, NotInGamma, Inconclusive };

std::string_view to_string(GammaVerdict v);

struct DefectEntry {
  int l = 0;
  std::size_t curveId = 0;
  std::size_t phiId = 0;
  double defect = 0.0;
  double quadratureError = 0.0;
};

struct DefectReport {
  std::vector<DefectEntry> entries;  // ordered by (l, curveId, phiId)
  double maxDefect = 0.0;
  double maxQuadratureError = 0.0;
  double threshold = 0.0;
  bool pass = true;                  // maxDefect <= threshold
  GammaVerdict verdict = GammaVerdict::Consistent;
};

/// Finite evidence for membership in Gamma(K): every (l, curve, phi) triple
/// with l < order is checked. A defect above the threshold that also clears
/// ten times its quadrature error is a genuine disproof; one that does not
/// is reported as inconclusive.
DefectReport gamma_membership(const Jet& G, const std::vector<Polyline>& curves,
                              const std::vector<Rational>& phis, double threshold,
                              const IbpOptions& opt = {});

/// Connectors, loops and boundary curves of the descriptor.
std::vector<Polyline> default_check_curves(const CompactSetDescriptor& set);

/// {1, z, z^2} plus 1/(z - p) for every finite pole p.
std::vector<Rational> default_test_functions(const CompactSetDescriptor& set);

/// CSV with header "l,curve,phi,defect".
void write_csv(std::ostream& os, const DefectReport& report);

struct PositionDerivativeResult {
  std::vector<double> defects;  // one per step, in the order given
  double maxDefect = 0.0;
};

/// Difference-quotient defect |(g_l(gamma(t)) - g_l(gamma(a)))/(gamma(t) - gamma(a)) - g_{l+1}(gamma(a))|
/// where gamma(a) is vertex `vertexIndex` and gamma(t) lies `step` further
/// along the curve (arc length; closed curves wrap around).
PositionDerivativeResult position_derivative_defect(const Jet& G, int l, const Polyline& curve,
                                                    std::size_t vertexIndex,
                                                    const std::vector<double>& steps);

}  // namespace jetapprox
