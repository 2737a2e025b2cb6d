#pragma once

#include "jetapprox/rational.hpp"

#include <random>
#include <vector>

namespace jetapprox {

struct RandomRationalSpec {
  int maxPoles = 3;
  int maxPoleOrder = 5;
  int maxPolyDegree = 5;
  double maxCoeff = 1.0;     // coefficient moduli are drawn in [0, maxCoeff]
  double poleRadius = 2.0;   // poles drawn in the square [-poleRadius, poleRadius]^2
  bool skipOrderOne = false; // leave out (z - a)^-1 terms
};

template <typename Real, typename Rng>
std::complex<Real> random_coefficient(Rng& rng, Real maxModulus) {
  std::uniform_real_distribution<Real> radius(0, maxModulus);
  std::uniform_real_distribution<Real> angle(0, Real(2 * 3.14159265358979323846));
  return std::polar(radius(rng), angle(rng));
}

/// Random element of R_L with distinct random poles.
template <typename Real, typename Rng>
RationalFunction<Real> random_rational(Rng& rng, const RandomRationalSpec& spec = {}) {
  using Scalar = std::complex<Real>;
  std::uniform_int_distribution<int> poleCount(0, spec.maxPoles);
  std::uniform_int_distribution<int> order(1, spec.maxPoleOrder);
  std::uniform_int_distribution<int> degree(0, spec.maxPolyDegree);
  std::uniform_real_distribution<Real> coord(Real(-spec.poleRadius), Real(spec.poleRadius));

  typename Polynomial<Real>::Coefficients pc(degree(rng) + 1);
  for (Eigen::Index k = 0; k < pc.size(); ++k) pc(k) = random_coefficient<Real>(rng, Real(spec.maxCoeff));

  std::vector<PrincipalPart<Real>> parts;
  const int np = poleCount(rng);
  for (int i = 0; i < np; ++i) {
    PrincipalPart<Real> part{Scalar(coord(rng), coord(rng)), {}};
    const int top = order(rng);
    for (int r = spec.skipOrderOne ? 2 : 1; r <= top; ++r)
      part.coeffs[r] = random_coefficient<Real>(rng, Real(spec.maxCoeff));
    parts.push_back(std::move(part));
  }
  return RationalFunction<Real>(Polynomial<Real>(std::move(pc)), std::move(parts));
}

}  // namespace jetapprox
