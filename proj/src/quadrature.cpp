#include "jetapprox/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace jetapprox {
namespace {

GaussRule build_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(std::size_t(n));
  rule.weights.resize(std::size_t(n));
  for (int i = 0; i < n; ++i) {
    // Chebyshev-like initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[std::size_t(i)] = x;
    rule.weights[std::size_t(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  static const GaussRule rule16 = build_rule(16);
  static const GaussRule rule32 = build_rule(32);
  if (order == 16) return rule16;
  if (order == 32) return rule32;
  throw Error(ErrorKind::InvalidParams, "only 16- and 32-node Gauss-Legendre rules are tabulated");
}

}  // namespace jetapprox
