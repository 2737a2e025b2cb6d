#include "jetapprox/polyline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace jetapprox {

Polyline make_polyline(std::vector<std::complex<double>> vertices, bool closed) {
  if (vertices.size() < 2) throw Error(ErrorKind::InvalidParams, "polyline needs at least 2 vertices");
  if (closed && vertices.front() != vertices.back())
    throw Error(ErrorKind::CurveNotClosed, "closed polyline must end at its first vertex");
  Polyline c{std::move(vertices), closed};
  const double len = curve_length(c);
  if (!(len > 0.0) || !std::isfinite(len))
    throw Error(ErrorKind::InvalidParams, "polyline length must be finite and positive");
  return c;
}

Polyline circle_polygon(std::complex<double> center, double radius, int sides, double phase,
                        int turns) {
  if (sides < 3 || !(radius > 0.0) || turns < 1)
    throw Error(ErrorKind::InvalidParams, "circle polygon needs >= 3 sides, radius > 0, turns >= 1");
  std::vector<std::complex<double>> v;
  v.reserve(std::size_t(sides * turns + 1));
  for (int t = 0; t < turns; ++t)
    for (int j = 0; j < sides; ++j)
      v.push_back(center + std::polar(radius, phase + 2.0 * std::numbers::pi * j / sides));
  v.push_back(v.front());
  return Polyline{std::move(v), true};
}

double curve_length(const Polyline& curve) {
  double len = 0.0;
  for (std::size_t j = 0; j + 1 < curve.vertices.size(); ++j)
    len += std::abs(curve.vertices[j + 1] - curve.vertices[j]);
  return len;
}

Polyline reversed(const Polyline& curve) {
  Polyline r = curve;
  std::reverse(r.vertices.begin(), r.vertices.end());
  return r;
}

Polyline concatenate(const Polyline& a, const Polyline& b) {
  if (a.end() != b.start())
    throw Error(ErrorKind::InvalidParams, "concatenated curves must share the junction point");
  Polyline c = a;
  c.vertices.insert(c.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
  c.closed = c.vertices.front() == c.vertices.back();
  return c;
}

Polyline refined(const Polyline& curve, int parts) {
  if (parts < 1) throw Error(ErrorKind::InvalidParams, "refinement factor must be >= 1");
  Polyline r{{}, curve.closed};
  for (std::size_t j = 0; j + 1 < curve.vertices.size(); ++j) {
    const auto a = curve.vertices[j];
    const auto b = curve.vertices[j + 1];
    for (int p = 0; p < parts; ++p) r.vertices.push_back(a + (b - a) * (double(p) / parts));
  }
  r.vertices.push_back(curve.vertices.back());
  return r;
}

double curve_diameter(const Polyline& curve) {
  double d = 0.0;
  for (std::size_t i = 0; i < curve.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < curve.vertices.size(); ++j)
      d = std::max(d, std::abs(curve.vertices[i] - curve.vertices[j]));
  return d;
}

double distance_to_curve(const Polyline& curve, std::complex<double> p) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j + 1 < curve.vertices.size(); ++j) {
    const auto a = curve.vertices[j];
    const auto ab = curve.vertices[j + 1] - a;
    const double len2 = std::norm(ab);
    double t = len2 > 0.0 ? (std::conj(ab) * (p - a)).real() / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    best = std::min(best, std::abs(p - (a + t * ab)));
  }
  if (curve.vertices.size() == 1) best = std::abs(p - curve.vertices[0]);
  return best;
}

std::complex<double> point_at_arclength(const Polyline& curve, double s) {
  if (s <= 0.0) return curve.vertices.front();
  for (std::size_t j = 0; j + 1 < curve.vertices.size(); ++j) {
    const auto a = curve.vertices[j];
    const auto b = curve.vertices[j + 1];
    const double len = std::abs(b - a);
    if (s <= len) return a + (b - a) * (s / len);
    s -= len;
  }
  return curve.vertices.back();
}

double arclength_to_vertex(const Polyline& curve, std::size_t index) {
  double s = 0.0;
  for (std::size_t j = 0; j < index && j + 1 < curve.vertices.size(); ++j)
    s += std::abs(curve.vertices[j + 1] - curve.vertices[j]);
  return s;
}

}  // namespace jetapprox
