#include "jetapprox/countable.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace jetapprox {
namespace {

constexpr double kMargin = 0.99;
constexpr double kMinRadius = 1e-13;
constexpr double kCircumferenceGap = 1e-12;
constexpr double kInitialFraction = 0.495;

struct DiskBuilder {
  const CountableTarget& target;
  int k;
  // values[j][i] = f_j(x_i), j = 0..k
  std::vector<std::vector<Complex>> values;
  std::vector<PolynomialPiece> pieces;
  double limit;

  DiskBuilder(const CountableTarget& t, int order) : target(t), k(order), limit(kMargin / (2.0 * order)) {
    values.resize(std::size_t(k + 1));
    for (int j = 0; j <= k; ++j)
      for (const auto& x : t.points) values[std::size_t(j)].push_back(t.value(std::size_t(j), x));
  }

  std::vector<Complex> taylor_values(std::size_t i) const {
    std::vector<Complex> v;
    for (int s = 0; s <= k; ++s) v.push_back(values[std::size_t(s)][i]);
    return v;
  }

  // sup over |w| <= rho of |p^(q)(x + w)| where p^(s)(x) = v[s].
  static double derivative_bound(const std::vector<Complex>& v, int q, double rho) {
    double acc = 0.0, fact = 1.0, power = 1.0;
    for (std::size_t m = std::size_t(q); m < v.size(); ++m) {
      acc += std::abs(v[m]) * power / fact;
      const double step = double(m - std::size_t(q) + 1);
      fact *= step;
      power *= rho;
    }
    return acc;
  }

  bool acceptable(std::size_t center, double rho, const std::vector<Complex>& v) const {
    const Complex c = target.points[center];
    for (const auto& p : pieces)
      if (!(std::abs(c - p.disk.center) > rho + p.disk.radius)) return false;

    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < target.points.size(); ++i) {
      const double d = std::abs(target.points[i] - c);
      if (std::abs(d - rho) <= kCircumferenceGap * rho) return false;
      if (d < rho) inside.push_back(i);
    }
    for (int j = 0; j <= k; ++j) {
      const auto& f = values[std::size_t(j)];
      for (std::size_t a = 0; a < inside.size(); ++a)
        for (std::size_t b = a + 1; b < inside.size(); ++b)
          if (!(std::abs(f[inside[a]] - f[inside[b]]) < limit)) return false;
    }
    for (int s = 0; s <= k; ++s)
      if (!(2.0 * rho * derivative_bound(v, s + 1, rho) < limit)) return false;
    return true;
  }

  void place(std::size_t center, double rho) {
    const auto v = taylor_values(center);
    const double start = rho;
    while (!acceptable(center, rho, v)) {
      rho *= 0.5;
      if (rho < kMinRadius) {
        std::size_t nearest = center;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < target.points.size(); ++i)
          if (i != center && std::abs(target.points[i] - target.points[center]) < best) {
            best = std::abs(target.points[i] - target.points[center]);
            nearest = i;
          }
        throw Error(ErrorKind::NonTermination,
                    "disk radius underflow at point index " + std::to_string(center) + " (nearest point index " +
                        std::to_string(nearest) + ", initial radius " + std::to_string(start) + ")");
      }
    }
    pieces.push_back({center, Disk{target.points[center], rho}, taylor_interpolant(target.points[center], v)});
  }

  bool covered(std::size_t i) const {
    for (const auto& p : pieces)
      if (p.disk.contains_strictly(target.points[i])) return true;
    return false;
  }
};

void validate(const CountableTarget& t, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidParams, "countable approximation needs k >= 1");
  if (t.points.empty()) throw Error(ErrorKind::InvalidParams, "countable target has no points");
  for (std::size_t i = 0; i < t.points.size(); ++i)
    for (std::size_t j = i + 1; j < t.points.size(); ++j)
      if (t.points[i] == t.points[j]) throw Error(ErrorKind::InvalidParams, "countable target points must be distinct");
}

}  // namespace

const PolynomialPiece* PiecewisePolynomial::piece_at(Complex z) const {
  for (const auto& p : pieces)
    if (p.disk.contains_strictly(z)) return &p;
  return nullptr;
}

Poly taylor_interpolant(Complex x, std::span<const Complex> values) {
  std::vector<Complex> shifted;
  double fact = 1.0;
  for (std::size_t s = 0; s < values.size(); ++s) {
    if (s > 0) fact *= double(s);
    shifted.push_back(values[s] / fact);
  }
  return from_shifted_basis<double>(shifted, x);
}

std::vector<PolynomialPiece> build_disk_system(const CountableTarget& target, int k) {
  validate(target, k);
  DiskBuilder builder(target, k);
  const std::size_t n = target.points.size();
  const std::size_t first = std::min(n, std::size_t(k) + 1);

  double spread = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) spread = std::max(spread, std::abs(target.points[i] - target.points[j]));
  if (spread == 0.0) spread = 1.0;

  for (std::size_t i = 0; i < first; ++i) {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < first; ++j)
      if (j != i) d = std::min(d, std::abs(target.points[i] - target.points[j]));
    builder.place(i, std::isfinite(d) ? kInitialFraction * d : spread);
  }
  for (;;) {
    std::size_t t = 0;
    while (t < n && builder.covered(t)) ++t;
    if (t == n) break;
    double gap = std::numeric_limits<double>::infinity();
    for (const auto& p : builder.pieces)
      gap = std::min(gap, std::abs(target.points[t] - p.disk.center) - p.disk.radius);
    builder.place(t, kInitialFraction * gap);
  }
  return std::move(builder.pieces);
}

CountableApprox locally_polynomial_approx(const CountableTarget& target, int k) {
  CountableApprox out;
  out.h.pieces = build_disk_system(target, k);
  out.errorTable.assign(std::size_t(k + 1), 0.0);
  for (const auto& x : target.points)
    for (int s = 0; s <= k; ++s) {
      const double e = std::abs(derivative_at(out.h, s, x) - target.value(std::size_t(s), x));
      out.errorTable[std::size_t(s)] = std::max(out.errorTable[std::size_t(s)], e);
    }
  return out;
}

Complex derivative_at(const PiecewisePolynomial& h, int s, Complex z) {
  if (s < 0) throw Error(ErrorKind::InvalidParams, "derivative order must be >= 0");
  const PolynomialPiece* p = h.piece_at(z);
  if (!p) throw Error(ErrorKind::Uncovered, "point is not inside any disk of the system");
  if (s > p->poly.degree()) return 0.0;
  return differentiate(p->poly, s)(z);
}

void write_csv(std::ostream& os, const std::vector<CountableRow>& rows) {
  os << "k,s,supError,bound\n";
  char buf[128];
  for (const auto& row : rows)
    for (std::size_t s = 0; s < row.approx.errorTable.size(); ++s) {
      std::snprintf(buf, sizeof buf, "%d,%zu,%.17g,%.17g\n", row.k, s, row.approx.errorTable[s], 1.0 / row.k);
      os << buf;
    }
}

}  // namespace jetapprox
