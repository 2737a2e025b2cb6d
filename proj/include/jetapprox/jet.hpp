#pragma once

#include "jetapprox/geometry.hpp"
#include "jetapprox/rational.hpp"

#include <complex>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace jetapprox {

class FunctionOracle;

enum class NamedKind { Exp, Sin, Cos, ReciprocalShift, PowerSeries };

/// Small family of analytic functions closed under exact differentiation.
/// The value is scale * d^derivative/dz^derivative base(rate * z); the rate
/// applies to exp, sin and cos.
struct NamedAnalytic {
  NamedKind kind = NamedKind::Exp;
  Complex scale{1.0, 0.0};
  int derivative = 0;
  Complex rate{1.0, 0.0};
  Complex pole{0.0, 0.0};       // ReciprocalShift: 1/(z - pole)
  std::vector<Complex> coeffs;  // PowerSeries: sum coeffs[k] (z - center)^k
  Complex center{0.0, 0.0};
  double radius = std::numeric_limits<double>::infinity();
};

struct ComplexLess {
  bool operator()(const Complex& a, const Complex& b) const {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  }
};

/// Values known only at sample points.
struct Tabulated {
  std::map<Complex, Complex, ComplexLess> values;
};

struct OracleSum {
  std::shared_ptr<const std::vector<FunctionOracle>> terms;
};

/// A function on K: rational, named analytic, tabulated, or a finite sum of those.
class FunctionOracle {
 public:
  using Representation = std::variant<Rational, NamedAnalytic, Tabulated, OracleSum>;

  FunctionOracle() : rep_(Rational{}) {}
  FunctionOracle(Rational f) : rep_(std::move(f)) {}  // NOLINT
  FunctionOracle(NamedAnalytic f) : rep_(std::move(f)) {}  // NOLINT
  FunctionOracle(Tabulated f) : rep_(std::move(f)) {}  // NOLINT

  static FunctionOracle constant(Complex c) { return Rational(Poly::constant(c)); }
  static FunctionOracle exp(Complex scale = 1.0, Complex rate = 1.0);
  static FunctionOracle sin(Complex scale = 1.0, Complex rate = 1.0);
  static FunctionOracle cos(Complex scale = 1.0, Complex rate = 1.0);
  static FunctionOracle reciprocal_shift(Complex pole, Complex scale = 1.0);
  static FunctionOracle power_series(std::vector<Complex> coeffs, Complex center, double radius);
  static FunctionOracle tabulated(const std::vector<Complex>& points, const std::vector<Complex>& values);
  static FunctionOracle sum(std::vector<FunctionOracle> terms);

  Complex operator()(Complex z) const;
  bool differentiable() const;
  /// Exact derivative; NotDifferentiable for tabulated data.
  FunctionOracle derivative() const;
  std::string describe() const;

  const Representation& representation() const { return rep_; }

 private:
  Representation rep_;
};

/// Finite derivative sequence (g_0, ..., g_N). A jet produced by jet_of keeps
/// its source so that components above its order remain available exactly.
struct Jet {
  std::vector<FunctionOracle> components;
  std::optional<FunctionOracle> source;

  int order() const { return int(components.size()) - 1; }
  FunctionOracle component(int k) const;
  bool extendable() const { return source.has_value(); }
};

Jet jet_of(const FunctionOracle& f, int order);
Jet zero_jet(int order);
/// Jet from independent components (need not be derivatives of each other).
Jet jet_from_components(std::vector<FunctionOracle> components);

/// Taylor coefficients g^(k)(center)/k!, k = 0..degree.
std::vector<Complex> taylor_coefficients(const FunctionOracle& g, Complex center, int degree);

/// max over samples of |F_k - G_k|.
double seminorm(int k, const Jet& F, const Jet& G, const CompactSetDescriptor& set);

struct MetricValue {
  double value = 0.0;
  double tailBound = 0.0;  // 2^-N_max, bound on the omitted terms k > N_max
  std::vector<double> seminorms;
};

/// Truncated metric sum_{k <= nMax} 2^-k s_k/(1 + s_k), s_k = seminorm(k).
MetricValue d_metric(const Jet& F, const Jet& G, const CompactSetDescriptor& set, int nMax = 20);

}  // namespace jetapprox
