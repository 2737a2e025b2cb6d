#include "jetapprox/geometry.hpp"
#include "jetapprox/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace jetapprox;

namespace {

void check_invariants(const CompactSetDescriptor& k) {
  CHECK(std::find(k.denseSubsetSamples.begin(), k.denseSubsetSamples.end(), k.basePoint) != k.denseSubsetSamples.end());
  for (const auto& z : k.denseSubsetSamples)
    CHECK(std::find(k.samples.begin(), k.samples.end(), z) != k.samples.end());
  for (const auto& c : k.connectors) {
    CHECK(c.path.start() == k.basePoint);
    CHECK(c.path.end() == c.target);
    CHECK(curve_length(c.path) <= k.connectorBound * (1.0 + 1e-12));
  }
  if (k.kind != SetKind::Countable)
    for (const auto& z : k.denseSubsetSamples)
      if (z != k.basePoint) CHECK(k.connector_to(z) != nullptr);
  REQUIRE(k.loops.size() == k.finitePoles.size());
  for (std::size_t i = 0; i < k.loops.size(); ++i)
    for (std::size_t j = 0; j < k.finitePoles.size(); ++j) {
      const Complex v = winding_value(k.loops[i], k.finitePoles[j]);
      CHECK(std::abs(v - (i == j ? 1.0 : 0.0)) <= 1e-6);
    }
}

}  // namespace

TEST_CASE("curve_length") {
  CHECK(curve_length(make_polyline({0.0, 1.0})) == doctest::Approx(1.0));
  CHECK(curve_length(make_polyline({0.0, 1.0, Complex(1.0, 1.0), Complex(0.0, 1.0), 0.0}, true)) == doctest::Approx(4.0));
  CHECK(curve_length(circle_polygon(0.0, 1.0, 64)) ==
        doctest::Approx(64 * 2 * std::sin(std::numbers::pi / 64)).epsilon(1e-14));
}

TEST_CASE("polyline validation and helpers") {
  CHECK_THROWS_AS(make_polyline({1.0}), Error);
  CHECK_THROWS_AS(make_polyline({1.0, 1.0}), Error);
  try {
    make_polyline({0.0, 1.0, Complex(0.0, 1.0)}, true);
    FAIL("expected CurveNotClosed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CurveNotClosed);
  }
  const auto sq = make_polyline({0.0, 1.0, Complex(1.0, 1.0), Complex(0.0, 1.0), 0.0}, true);
  CHECK(curve_length(refined(sq, 5)) == doctest::Approx(4.0));
  CHECK(refined(sq, 5).vertices.size() == 21);
  CHECK(std::abs(point_at_arclength(sq, 1.5) - Complex(1.0, 0.5)) < 1e-15);
  CHECK(arclength_to_vertex(sq, 3) == doctest::Approx(3.0));
  CHECK(curve_diameter(sq) == doctest::Approx(std::sqrt(2.0)));
  CHECK(distance_to_curve(sq, Complex(0.5, 0.5)) == doctest::Approx(0.5));
  CHECK(reversed(sq).vertices[1] == Complex(0.0, 1.0));
}

TEST_CASE("winding_number") {
  const auto c = circle_polygon(0.0, 1.0, 64);
  CHECK(winding_number(c, 0.0) == 1);
  CHECK(winding_number(c, 3.0) == 0);
  CHECK(winding_number(circle_polygon(0.0, 1.0, 64, 0.0, 2), 0.0) == 2);
  CHECK(winding_number(reversed(c), Complex(0.2, -0.1)) == -1);
  CHECK_THROWS_AS(winding_number(make_polyline({0.0, 1.0}), 0.5), Error);
  try {
    winding_number(make_polyline({0.0, 1.0}), Complex(0.5, 0.5));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CurveNotClosed);
  }
  const std::vector<Complex> v{Complex(1.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 0.0), Complex(0.0, -1.0), Complex(1.0, 0.0)};
  CHECK(winding_number(make_polyline(v, true), Complex(0.0, 0.0)) == 1);
}

TEST_CASE("disk descriptor") {
  SetParams p;
  p.samples = 256;
  const auto k = make_set(SetKind::Disk, p);
  CHECK(k.samples.size() == 256);
  CHECK(k.connectorBound == doctest::Approx(2.0));
  CHECK(k.finitePoles.empty());
  CHECK(k.loops.empty());
  CHECK(k.includesInfinity);
  double maxModulus = 0.0;
  for (const auto& z : k.samples) maxModulus = std::max(maxModulus, std::abs(z));
  CHECK(maxModulus == doctest::Approx(1.0));
  check_invariants(k);
  // any two samples are joined through the center within M
  for (const auto& a : k.connectors)
    for (const auto& b : k.connectors) CHECK(curve_length(a.path) + curve_length(b.path) <= k.connectorBound + 1e-12);
}

TEST_CASE("segment descriptor") {
  const auto k = make_set(SetKind::Segment, SetParams{});
  CHECK(k.connectorBound == doctest::Approx(1.0));
  CHECK(k.finitePoles.empty());
  CHECK(k.loops.empty());
  check_invariants(k);
}

TEST_CASE("circle descriptor") {
  SetParams p;
  p.samples = 64;
  const auto k = make_set(SetKind::Circle, p);
  REQUIRE(k.finitePoles.size() == 1);
  CHECK(k.finitePoles[0] == Complex(0.0));
  CHECK(winding_number(k.loops[0], 0.0) == 1);
  check_invariants(k);
}

TEST_CASE("annulus descriptor") {
  SetParams p;
  p.innerRadius = 0.5;
  p.radius = 1.0;
  const auto k = make_set(SetKind::Annulus, p);
  REQUIRE(k.loops.size() == 1);
  for (const auto& v : k.loops[0].vertices) CHECK(std::abs(v) == doctest::Approx(0.75));
  CHECK(winding_number(k.loops[0], 0.0) == 1);
  for (const auto& z : k.samples) {
    CHECK(std::abs(z) >= 0.5 - 1e-12);
    CHECK(std::abs(z) <= 1.0 + 1e-12);
  }
  for (const auto& c : k.connectors)
    for (const auto& v : c.path.vertices) CHECK(std::abs(v) >= 0.5 - 1e-12);
  check_invariants(k);

  p.innerRadius = 1.5;
  CHECK_THROWS_AS(make_set(SetKind::Annulus, p), Error);
}

TEST_CASE("dumbbell descriptor shares the junction points") {
  const auto k = make_set(SetKind::Dumbbell, SetParams{});
  REQUIRE(k.pieces.size() == 3);
  const Complex A(1.0, 0.0), B(2.0, 0.0);
  auto in_piece = [&](std::size_t piece, Complex z) {
    for (auto i : k.pieces[piece].sampleIndices)
      if (k.samples[i] == z) return true;
    return false;
  };
  CHECK(in_piece(0, A));
  CHECK(in_piece(1, A));
  CHECK(in_piece(1, B));
  CHECK(in_piece(2, B));
  check_invariants(k);
}

TEST_CASE("countable descriptor") {
  SetParams p;
  p.nMax = 200;
  const auto k = make_set(SetKind::Countable, p);
  CHECK(k.samples.size() == 201);
  CHECK(k.samples[0] == Complex(0.0));
  CHECK(k.samples[200] == Complex(1.0 / 200));
  p.points = {1.0, 1.0};
  CHECK_THROWS_AS(make_set(SetKind::Countable, p), Error);
}

TEST_CASE("invalid parameters") {
  SetParams p;
  p.samples = 8;
  CHECK_THROWS_AS(make_set(SetKind::Disk, p), Error);
  p = {};
  p.radius = -1.0;
  CHECK_THROWS_AS(make_set(SetKind::Disk, p), Error);
  CHECK_THROWS_AS(make_set(SetKind::Custom, SetParams{}), Error);
  CHECK_THROWS_AS(parse_set_kind("torus"), Error);

  auto k = make_set(SetKind::Annulus, SetParams{});
  k.loops[0] = circle_polygon(2.0, 0.1);
  CHECK_THROWS_AS(validate_descriptor(k), Error);
}
