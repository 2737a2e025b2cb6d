#pragma once

#include "jetapprox/geometry.hpp"
#include "jetapprox/jet.hpp"
#include "jetapprox/rational.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace jetapprox {

enum class ApproxMethod { Taylor, Laurent, LeastSquares };

std::string_view to_string(ApproxMethod m);
ApproxMethod parse_approx_method(std::string_view name);

struct PoleDegree {
  Complex pole;
  int degree = 0;
};

/// Basis budget for one uniform approximation: monomials z^k, k <= polyDegree,
/// and (z - a)^(-r), r <= degree, for each listed finite pole a.
struct ApproxConfig {
  ApproxMethod method = ApproxMethod::LeastSquares;
  int polyDegree = 0;
  std::vector<PoleDegree> poleDegrees;

  int basis_size() const;
  int pole_degree(Complex pole) const;
};

struct ApproxResult {
  Rational h;
  double supError = 0.0;       // max over samples |h - g|
  bool illConditioned = false; // rank deficiency detected (least squares only)
  int rank = 0;
  int basisSize = 0;
};

/// Sup-norm approximation of g on K by a rational function whose poles lie
/// in the descriptor's pole set.
///
/// - taylor: truncated Taylor series at the center of a disk-kind set; the
///   oracle must converge on the whole disk.
/// - laurent: truncated Laurent series at the finite pole of an annulus-kind
///   set, coefficients by contour quadrature over the set's loop.
/// - least-squares: discrete least squares over all samples with columns
///   scaled to unit max modulus, solved by a rank-revealing complete
///   orthogonal decomposition (relative rank threshold 1e-10). Rank
///   deficiency sets illConditioned but the computed h is still returned.
ApproxResult uniform_approx(const FunctionOracle& g, const CompactSetDescriptor& set,
                            const ApproxConfig& cfg);

enum class ScheduleAxis { Polynomial, Poles };

/// Configs of increasing budget d = start, start + step, ..., <= stop.
/// Polynomial axis: polyDegree = d. Poles axis: every pole degree of `base`
/// becomes d and polyDegree = base.polyDegree + polyPerPoleDegree * d.
std::vector<ApproxConfig> degree_schedule(int start, int stop, int step, const ApproxConfig& base = {},
                                          ScheduleAxis axis = ScheduleAxis::Polynomial,
                                          int polyPerPoleDegree = 0);

}  // namespace jetapprox
