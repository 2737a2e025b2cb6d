#pragma once

#include "jetapprox/error.hpp"
#include "jetapprox/polyline.hpp"

#include <limits>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace jetapprox {

struct QuadratureResult {
  std::complex<double> value;
  double errorEstimate = 0.0;
  int nodesUsed = 0;
};

struct QuadratureOptions {
  int order = 16;     // 16 or 32 Gauss-Legendre nodes per panel
  int maxDepth = 12;  // bisection levels per polyline segment
};

/// Gauss-Legendre nodes on [-1, 1] with weights.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Tabulated rule for order 16 or 32 (computed once, Newton-polished to
/// machine precision).
const GaussRule& gauss_legendre(int order);

namespace detail {

struct PanelSum {
  std::complex<double> value;
  double magnitude;  // sum |w f| |dz|, for the roundoff floor
};

template <typename F>
PanelSum panel(F& f, std::complex<double> a, std::complex<double> b, const GaussRule& rule) {
  const std::complex<double> half = 0.5 * (b - a);
  const std::complex<double> mid = 0.5 * (a + b);
  std::complex<double> acc(0.0);
  double mag = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const std::complex<double> fz = f(mid + half * rule.nodes[i]);
    if (!std::isfinite(fz.real()) || !std::isfinite(fz.imag()))
      throw Error(ErrorKind::PoleEvaluation, "non-finite integrand value on the curve");
    acc += rule.weights[i] * fz;
    mag += rule.weights[i] * std::abs(fz);
  }
  return {acc * half, mag * std::abs(half)};
}

template <typename F>
std::complex<double> adaptive_segment(F& f, std::complex<double> a, std::complex<double> b,
                                      std::complex<double> coarse, double tol, int depth,
                                      const QuadratureOptions& opt, const GaussRule& rule,
                                      QuadratureResult& acc) {
  const std::complex<double> m = 0.5 * (a + b);
  const auto left = panel(f, a, m, rule);
  const auto right = panel(f, m, b, rule);
  acc.nodesUsed += 2 * int(rule.nodes.size());
  const std::complex<double> fine = left.value + right.value;
  const double diff = std::abs(fine - coarse);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * (left.magnitude + right.magnitude);
  if (diff <= std::max(tol, floor)) {
    acc.errorEstimate += diff;
    return fine;
  }
  if (depth >= opt.maxDepth)
    throw Error(ErrorKind::NoConvergence, "contour quadrature did not converge within maxDepth bisections");
  return adaptive_segment(f, a, m, left.value, 0.5 * tol, depth + 1, opt, rule, acc) +
         adaptive_segment(f, m, b, right.value, 0.5 * tol, depth + 1, opt, rule, acc);
}

}  // namespace detail

/// Integral of f(z) dz along the polyline. Each segment gets a share of `tol`
/// proportional to its length and is bisected until successive refinements
/// agree; segments are summed in order.
template <typename F>
QuadratureResult contour_integral(F&& f, const Polyline& curve, double tol,
                                  const QuadratureOptions& opt = {}) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidParams, "quadrature tolerance must be positive");
  const GaussRule& rule = gauss_legendre(opt.order);
  const double total = curve_length(curve);
  QuadratureResult out{{0.0, 0.0}, 0.0, 0};
  for (std::size_t j = 0; j + 1 < curve.vertices.size(); ++j) {
    const auto a = curve.vertices[j];
    const auto b = curve.vertices[j + 1];
    if (a == b) continue;
    const auto coarse = detail::panel(f, a, b, rule);
    out.nodesUsed += int(rule.nodes.size());
    const double local = tol * std::abs(b - a) / total;
    out.value += detail::adaptive_segment(f, a, b, coarse.value, local, 0, opt, rule, out);
  }
  return out;
}

/// Line integral of a jet component (any callable) along an open or closed curve.
template <typename F>
std::complex<double> integral_along(F&& component, const Polyline& curve, double tol,
                                    const QuadratureOptions& opt = {}) {
  return contour_integral(std::forward<F>(component), curve, tol, opt).value;
}

}  // namespace jetapprox
