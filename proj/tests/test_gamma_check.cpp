#include "jetapprox/gamma_check.hpp"
#include "jetapprox/random.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace jetapprox;

namespace {

Jet decoupled() {
  return jet_from_components({FunctionOracle(Rational(Poly{0.0, 1.0})), FunctionOracle::constant(0.0)});
}

const Rational one(Poly{1.0});
const Rational zed(Poly{0.0, 1.0});

}  // namespace

TEST_CASE("ibp_defect examples") {
  const double tol = 1e-10;
  IbpOptions opt;
  opt.tol = tol;
  const Jet e = jet_of(FunctionOracle::exp(), 2);
  const auto path = make_polyline({Complex(0.2, -0.3), Complex(-0.5, 0.5), Complex(0.6, 0.1)});
  CHECK(ibp_defect(e, 0, path, one, opt) <= 10 * tol);

  const auto seg = make_polyline({0.0, 1.0});
  const auto terms = ibp_terms(decoupled(), 0, seg, one, opt);
  CHECK(std::abs(terms.phiTimesNext) == 0.0);
  CHECK(std::abs(terms.boundary - 1.0) < 1e-15);
  CHECK(std::abs(terms.valueTimesDphi) == 0.0);
  CHECK(terms.defect() == doctest::Approx(1.0).epsilon(1e-14));

  const Jet inv = jet_of(FunctionOracle(Rational::pole_term(2.0, 1)), 1);
  const auto circle = circle_polygon(0.0, 1.0, 64);
  CHECK(ibp_defect(inv, 0, circle, zed, opt) <= 10 * tol);
  CHECK(ibp_defect_closed(inv, 0, circle, zed, opt) <= 10 * tol);

  CHECK_THROWS_AS(ibp_defect(e, 2, seg, one, opt), Error);
  try {
    ibp_defect(e, 0, seg, Rational::pole_term(Complex(0.5, 0.05), 1), opt);
    FAIL("expected PoleTooClose");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::PoleTooClose);
  }
  opt.clearance = 0.01;
  CHECK(ibp_defect(e, 0, seg, Rational::pole_term(Complex(0.5, 0.05), 1), opt) <= 1e-8);
}

TEST_CASE("gamma_membership") {
  const auto disk = make_set(SetKind::Disk, SetParams{});
  const Jet e = jet_of(FunctionOracle::exp(), 3);
  const std::vector<Rational> phis{one, zed, Rational::pole_term(3.0, 1)};
  const auto curves = default_check_curves(disk);
  const auto report = gamma_membership(e, curves, phis, 1e-6);
  CHECK(report.pass);
  CHECK(report.verdict == GammaVerdict::Consistent);
  CHECK(report.entries.size() == 3 * curves.size() * phis.size());
  double mx = 0.0;
  for (const auto& en : report.entries) mx = std::max(mx, en.defect);
  CHECK(report.maxDefect == mx);
  for (std::size_t i = 1; i < report.entries.size(); ++i) {
    const auto& a = report.entries[i - 1];
    const auto& b = report.entries[i];
    CHECK(std::tie(a.l, a.curveId, a.phiId) < std::tie(b.l, b.curveId, b.phiId));
  }

  const auto seg = make_set(SetKind::Segment, SetParams{});
  const auto bad = gamma_membership(decoupled(), default_check_curves(seg), default_test_functions(seg), 1e-6);
  CHECK_FALSE(bad.pass);
  CHECK(bad.maxDefect >= 0.5);
  CHECK(bad.verdict == GammaVerdict::NotInGamma);

  const auto zero = gamma_membership(zero_jet(2), curves, phis, 1e-6);
  CHECK(zero.pass);
  CHECK(zero.maxDefect == 0.0);

  std::ostringstream os;
  write_csv(os, bad);
  CHECK(os.str().rfind("l,curve,phi,defect\n", 0) == 0);
}

TEST_CASE("default test functions") {
  const auto annulus = make_set(SetKind::Annulus, SetParams{});
  const auto phis = default_test_functions(annulus);
  REQUIRE(phis.size() == 4);
  CHECK(phis[3] == Rational::pole_term(0.0, 1));
}

TEST_CASE("property: holomorphic jets have quadrature-level defects") {
  std::mt19937_64 rng(29);
  RandomRationalSpec spec;
  spec.poleRadius = 4.0;
  const double tol = 1e-10;
  IbpOptions opt;
  opt.tol = tol;
  const auto path = make_polyline({Complex(-0.5, -0.5), Complex(0.5, -0.2), Complex(0.3, 0.6), Complex(-0.4, 0.3)});
  int tested = 0;
  while (tested < 40) {
    const Rational f = random_rational<double>(rng, spec);
    bool far = true;
    for (const auto& a : f.poles()) far = far && std::abs(a) > 2.0;
    if (!far) continue;
    ++tested;
    const Jet G = jet_of(FunctionOracle(f), 2);
    for (int l = 0; l < 2; ++l)
      for (const auto& phi : {one, zed, Rational(Poly{0.0, 0.0, 1.0})}) {
        const auto t = ibp_terms(G, l, path, phi, opt);
        const double scale = std::max({1.0, std::abs(t.phiTimesNext), std::abs(t.boundary)});
        CHECK(t.defect() <= 10 * tol * scale);
        // reparametrization
        const double refinedDefect = ibp_defect(G, l, refined(path, 3), phi, opt);
        CHECK(std::abs(refinedDefect - t.defect()) <= 2 * tol * scale);
      }
  }
}

TEST_CASE("property: closed-curve code paths agree") {
  std::mt19937_64 rng(31);
  IbpOptions opt;
  const auto loop = circle_polygon(Complex(0.1, 0.2), 0.7, 48);
  for (int t = 0; t < 20; ++t) {
    std::vector<FunctionOracle> comps;
    for (int k = 0; k < 2; ++k) {
      RandomRationalSpec spec;
      spec.poleRadius = 0.3;
      comps.push_back(FunctionOracle(random_rational<double>(rng, spec)));
    }
    const Jet G = jet_from_components(comps);
    const Rational phi(Poly{random_coefficient<double>(rng, 1.0), random_coefficient<double>(rng, 1.0)});
    CHECK(ibp_defect(G, 0, loop, phi, opt) == doctest::Approx(ibp_defect_closed(G, 0, loop, phi, opt)).epsilon(1e-9));
  }
}

TEST_CASE("position_derivative_defect") {
  const std::vector<double> steps{1e-2, 1e-3, 1e-4, 1e-5};
  const auto seg = make_polyline({0.0, 0.5, 1.0});
  const auto r = position_derivative_defect(jet_of(FunctionOracle::exp(), 1), 0, seg, 1, steps);
  for (std::size_t i = 1; i < r.defects.size(); ++i) CHECK(r.defects[i] < r.defects[i - 1]);
  CHECK(r.defects.back() <= 1e-4);

  const auto circle = circle_polygon(0.0, 1.0, 256);
  const auto c = position_derivative_defect(jet_of(FunctionOracle(Rational(Poly{0.0, 0.0, 1.0})), 1), 0, circle, 0, steps);
  for (std::size_t i = 1; i < c.defects.size(); ++i) CHECK(c.defects[i] < c.defects[i - 1]);
  CHECK(c.defects.back() <= 1e-4);

  const auto d = position_derivative_defect(decoupled(), 0, seg, 1, steps);
  for (double v : d.defects) CHECK(v == doctest::Approx(1.0).epsilon(1e-9));

  const auto end = position_derivative_defect(jet_of(FunctionOracle::exp(), 1), 0, seg, 2, steps);
  CHECK(end.defects.back() <= 1e-4);
  CHECK_THROWS_AS(position_derivative_defect(decoupled(), 0, seg, 1, {0.0}), Error);
}
