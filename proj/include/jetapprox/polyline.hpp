#pragma once

#include "jetapprox/error.hpp"

#include <complex>
#include <vector>

namespace jetapprox {

/// Piecewise-linear rectifiable curve. A closed polyline repeats its first
/// vertex at the end.
struct Polyline {
  std::vector<std::complex<double>> vertices;
  bool closed = false;

  std::complex<double> start() const { return vertices.front(); }
  std::complex<double> end() const { return vertices.back(); }
  std::size_t segment_count() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

/// Builds a polyline and checks its invariants (>= 2 vertices, positive
/// length, closure when requested).
Polyline make_polyline(std::vector<std::complex<double>> vertices, bool closed = false);

/// Regular n-gon inscribed in the circle |z - center| = radius, starting at
/// angle `phase`, traversed `turns` times counter-clockwise.
Polyline circle_polygon(std::complex<double> center, double radius, int sides = 64,
                        double phase = 0.0, int turns = 1);

double curve_length(const Polyline& curve);

/// Reversed orientation.
Polyline reversed(const Polyline& curve);

/// Joins b after a; requires a.end() == b.start().
Polyline concatenate(const Polyline& a, const Polyline& b);

/// Splits every segment into `parts` equal pieces; same curve, more vertices.
Polyline refined(const Polyline& curve, int parts);

/// Largest distance between two vertices.
double curve_diameter(const Polyline& curve);

/// Euclidean distance from p to the curve.
double distance_to_curve(const Polyline& curve, std::complex<double> p);

/// Point at arc length `s` from the start (clamped to [0, length]).
std::complex<double> point_at_arclength(const Polyline& curve, double s);

/// Arc length from the start to vertex `index`.
double arclength_to_vertex(const Polyline& curve, std::size_t index);

}  // namespace jetapprox
