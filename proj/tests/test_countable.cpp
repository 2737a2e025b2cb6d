#include "jetapprox/countable.hpp"

#include <doctest.h>

#include <sstream>

using namespace jetapprox;

namespace {

std::vector<Complex> harmonic_points(int nMax) {
  std::vector<Complex> pts{0.0};
  for (int n = 1; n <= nMax; ++n) pts.push_back(1.0 / n);
  return pts;
}

void check_system(const CountableTarget& t, const std::vector<PolynomialPiece>& pieces) {
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      CHECK(std::abs(pieces[i].disk.center - pieces[j].disk.center) > pieces[i].disk.radius + pieces[j].disk.radius);
  for (const auto& p : pieces)
    for (const auto& x : t.points) CHECK(std::abs(x - p.disk.center) != p.disk.radius);
  for (const auto& x : t.points) {
    int covering = 0;
    for (const auto& p : pieces) covering += p.disk.contains_strictly(x);
    CHECK(covering == 1);
  }
}

}  // namespace

TEST_CASE("taylor_interpolant") {
  const std::vector<Complex> v{1.0, 1.0, 1.0};
  CHECK(taylor_interpolant(0.0, v) == Poly{1.0, 1.0, 0.5});
  const std::vector<Complex> c{Complex(2.0, -1.0)};
  CHECK(taylor_interpolant(3.0, c) == Poly::constant(Complex(2.0, -1.0)));
  const std::vector<Complex> lin{0.0, 2.0};
  const Poly p = taylor_interpolant(1.0, lin);
  CHECK(std::abs(p(1.0)) < 1e-15);
  CHECK(std::abs(differentiate(p)(1.0) - 2.0) < 1e-15);
  CHECK(std::abs(p(0.0) + 2.0) < 1e-15);
}

TEST_CASE("build_disk_system examples") {
  CountableTarget two{{0.0, 1.0}, {FunctionOracle::exp()}};
  const auto s = build_disk_system(two, 1);
  REQUIRE(s.size() == 2);
  CHECK(s[0].disk.center == Complex(0.0));
  CHECK(s[1].disk.center == Complex(1.0));
  for (const auto& p : s) CHECK(p.disk.radius < 0.5);
  check_system(two, s);

  CountableTarget zeros{harmonic_points(50), {}};
  const auto z = build_disk_system(zeros, 3);
  check_system(zeros, z);
  for (const auto& p : z) CHECK(p.poly.degree() == -1);

  CountableTarget single{{0.0}, {FunctionOracle::constant(1.0), FunctionOracle::constant(2.0), FunctionOracle::constant(3.0),
                                 FunctionOracle::constant(4.0)}};
  const auto one = build_disk_system(single, 3);
  REQUIRE(one.size() == 1);
  const std::vector<Complex> vals{1.0, 2.0, 3.0, 4.0};
  CHECK(one[0].poly == taylor_interpolant(0.0, vals));

  CountableTarget dup{{0.0, 0.0}, {}};
  CHECK_THROWS_AS(build_disk_system(dup, 1), Error);
  CHECK_THROWS_AS(build_disk_system(two, 0), Error);
}

TEST_CASE("greedy order follows the construction") {
  CountableTarget t{harmonic_points(30), {FunctionOracle::exp(1.0, 3.0)}};
  const auto s = build_disk_system(t, 4);
  for (std::size_t i = 0; i < 5; ++i) CHECK(s[i].centerIndex == i);
  for (std::size_t i = 5; i < s.size(); ++i) {
    CHECK(s[i].centerIndex > s[i - 1].centerIndex);
    for (std::size_t j = 0; j < s[i].centerIndex; ++j) {
      bool covered = false;
      for (std::size_t q = 0; q < i; ++q) covered = covered || s[q].disk.contains_strictly(t.points[j]);
      CHECK(covered);
    }
  }
}

TEST_CASE("locally_polynomial_approx") {
  const auto pts = harmonic_points(200);
  std::vector<Complex> roots;
  for (const auto& x : pts) roots.push_back(std::sqrt(std::abs(x)));
  CountableTarget t{pts, {FunctionOracle::tabulated(pts, roots), FunctionOracle::constant(42.0)}};
  const auto a = locally_polynomial_approx(t, 10);
  CHECK(a.errorTable[0] <= 0.1);
  CHECK(a.errorTable[1] <= 0.1);
  check_system(t, a.h.pieces);
  for (const auto& p : a.h.pieces) {
    const Complex x = t.points[p.centerIndex];
    for (int s = 0; s <= 10; ++s) CHECK(std::abs(derivative_at(a.h, s, x) - t.value(std::size_t(s), x)) <= 1e-12);
  }

  CountableTarget zeros{harmonic_points(40), {FunctionOracle::constant(0.0)}};
  const auto zz = locally_polynomial_approx(zeros, 4);
  for (double e : zz.errorTable) CHECK(e == 0.0);

  std::ostringstream os;
  write_csv(os, {{10, a}});
  CHECK(os.str().rfind("k,s,supError,bound\n", 0) == 0);
}

TEST_CASE("derivative_at") {
  PiecewisePolynomial h{{{0, Disk{0.0, 0.25}, Poly{1.0, 2.0}}}};
  CHECK(derivative_at(h, 1, 0.1) == Complex(2.0));
  CHECK(derivative_at(h, 4, 0.1) == Complex(0.0));
  try {
    derivative_at(h, 0, 0.9);
    FAIL("expected Uncovered");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Uncovered);
  }
}

TEST_CASE("property: error law across k") {
  const auto pts = harmonic_points(60);
  std::vector<Complex> wiggle;
  for (const auto& x : pts) wiggle.push_back(std::sin(1.0 / (x.real() + 0.05)));
  CountableTarget t{pts, {FunctionOracle::tabulated(pts, wiggle), FunctionOracle::cos(1.0, 4.0), FunctionOracle::constant(-3.0)}};
  for (int k = 1; k <= 8; ++k) {
    const auto a = locally_polynomial_approx(t, k);
    for (int s = 0; s <= k; ++s) CHECK(a.errorTable[std::size_t(s)] <= 1.0 / k);
    check_system(t, a.h.pieces);
  }
}
