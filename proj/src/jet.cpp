#include "jetapprox/jet.hpp"

#include <cmath>
#include <sstream>

namespace jetapprox {
namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Complex eval_named(const NamedAnalytic& f, Complex z) {
  const int d = f.derivative;
  const Complex chain = f.scale * std::pow(f.rate, d);
  const Complex u = f.rate * z;
  switch (f.kind) {
    case NamedKind::Exp:
      return chain * std::exp(u);
    case NamedKind::Sin: {
      static constexpr int sign[4] = {1, 1, -1, -1};
      return chain * double(sign[d % 4]) * (d % 2 ? std::cos(u) : std::sin(u));
    }
    case NamedKind::Cos: {
      static constexpr int sign[4] = {1, -1, -1, 1};
      return chain * double(sign[d % 4]) * (d % 2 ? std::sin(u) : std::cos(u));
    }
    case NamedKind::ReciprocalShift: {
      const Complex w = z - f.pole;
      if (w == Complex(0.0)) throw Error(ErrorKind::PoleEvaluation, "evaluation at the shifted pole");
      double fact = 1.0;
      for (int i = 2; i <= d; ++i) fact *= i;
      const double sign = d % 2 ? -1.0 : 1.0;
      return f.scale * sign * fact / std::pow(w, d + 1);
    }
    case NamedKind::PowerSeries: {
      const Complex w = z - f.center;
      if (!(std::abs(w) < f.radius))
        throw Error(ErrorKind::InvalidParams, "power series evaluated outside its convergence radius");
      Complex acc(0.0);
      for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = acc * w + *it;
      return f.scale * acc;
    }
  }
  return 0.0;
}

NamedAnalytic derive_named(NamedAnalytic f) {
  if (f.kind == NamedKind::PowerSeries) {
    std::vector<Complex> d;
    for (std::size_t k = 1; k < f.coeffs.size(); ++k) d.push_back(f.coeffs[k] * double(k));
    f.coeffs = std::move(d);
    return f;
  }
  ++f.derivative;
  return f;
}

std::string complex_str(Complex c) {
  std::ostringstream os;
  os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  return os.str();
}

}  // namespace

namespace {

NamedAnalytic named(NamedKind kind, Complex scale, Complex rate = 1.0) {
  NamedAnalytic f;
  f.kind = kind;
  f.scale = scale;
  f.rate = rate;
  return f;
}

}  // namespace

FunctionOracle FunctionOracle::exp(Complex scale, Complex rate) { return named(NamedKind::Exp, scale, rate); }
FunctionOracle FunctionOracle::sin(Complex scale, Complex rate) { return named(NamedKind::Sin, scale, rate); }
FunctionOracle FunctionOracle::cos(Complex scale, Complex rate) { return named(NamedKind::Cos, scale, rate); }

FunctionOracle FunctionOracle::reciprocal_shift(Complex pole, Complex scale) {
  NamedAnalytic f = named(NamedKind::ReciprocalShift, scale);
  f.pole = pole;
  return f;
}

FunctionOracle FunctionOracle::power_series(std::vector<Complex> coeffs, Complex center, double radius) {
  if (!(radius > 0.0)) throw Error(ErrorKind::InvalidParams, "convergence radius must be positive");
  NamedAnalytic f = named(NamedKind::PowerSeries, 1.0);
  f.coeffs = std::move(coeffs);
  f.center = center;
  f.radius = radius;
  return f;
}

FunctionOracle FunctionOracle::tabulated(const std::vector<Complex>& points, const std::vector<Complex>& values) {
  if (points.size() != values.size())
    throw Error(ErrorKind::InvalidParams, "tabulated oracle needs one value per point");
  Tabulated t;
  for (std::size_t i = 0; i < points.size(); ++i) t.values[points[i]] = values[i];
  return t;
}

FunctionOracle FunctionOracle::sum(std::vector<FunctionOracle> terms) {
  FunctionOracle f;
  f.rep_ = OracleSum{std::make_shared<const std::vector<FunctionOracle>>(std::move(terms))};
  return f;
}

Complex FunctionOracle::operator()(Complex z) const {
  return std::visit(Overloaded{
                        [&](const Rational& f) { return evaluate(f, z); },
                        [&](const NamedAnalytic& f) { return eval_named(f, z); },
                        [&](const Tabulated& f) {
                          auto it = f.values.find(z);
                          if (it == f.values.end())
                            throw Error(ErrorKind::NotTabulated, "no tabulated value at " + complex_str(z));
                          return it->second;
                        },
                        [&](const OracleSum& f) {
                          Complex acc(0.0);
                          for (const auto& t : *f.terms) acc += t(z);
                          return acc;
                        },
                    },
                    rep_);
}

bool FunctionOracle::differentiable() const {
  return std::visit(Overloaded{
                        [](const Tabulated&) { return false; },
                        [](const OracleSum& f) {
                          for (const auto& t : *f.terms)
                            if (!t.differentiable()) return false;
                          return true;
                        },
                        [](const auto&) { return true; },
                    },
                    rep_);
}

FunctionOracle FunctionOracle::derivative() const {
  return std::visit(Overloaded{
                        [](const Rational& f) { return FunctionOracle(differentiate(f)); },
                        [](const NamedAnalytic& f) { return FunctionOracle(derive_named(f)); },
                        [](const Tabulated&) -> FunctionOracle {
                          throw Error(ErrorKind::NotDifferentiable, "tabulated oracles cannot be differentiated");
                        },
                        [](const OracleSum& f) {
                          std::vector<FunctionOracle> d;
                          for (const auto& t : *f.terms) d.push_back(t.derivative());
                          return FunctionOracle::sum(std::move(d));
                        },
                    },
                    rep_);
}

std::string FunctionOracle::describe() const {
  return std::visit(Overloaded{
                        [](const Rational& f) {
                          std::ostringstream os;
                          os << "rational(deg " << f.polynomial_part().degree() << ", "
                             << f.principal_parts().size() << " poles)";
                          return os.str();
                        },
                        [](const NamedAnalytic& f) {
                          static const char* names[] = {"exp", "sin", "cos", "reciprocal-shift", "power-series"};
                          std::ostringstream os;
                          os << names[int(f.kind)];
                          if (f.derivative) os << "^(" << f.derivative << ")";
                          return os.str();
                        },
                        [](const Tabulated& f) { return "tabulated(" + std::to_string(f.values.size()) + ")"; },
                        [](const OracleSum& f) {
                          std::string s = "sum(";
                          for (std::size_t i = 0; i < f.terms->size(); ++i)
                            s += (i ? ", " : "") + (*f.terms)[i].describe();
                          return s + ")";
                        },
                    },
                    rep_);
}

FunctionOracle Jet::component(int k) const {
  if (k < 0) throw Error(ErrorKind::InvalidParams, "negative jet index");
  if (k <= order()) return components[std::size_t(k)];
  if (!source)
    throw Error(ErrorKind::InvalidParams,
                "jet component " + std::to_string(k) + " requested above the order of a non-extendable jet");
  FunctionOracle f = components.back();
  for (int i = order(); i < k; ++i) f = f.derivative();
  return f;
}

Jet jet_of(const FunctionOracle& f, int order) {
  if (order < 0) throw Error(ErrorKind::InvalidParams, "jet order must be >= 0");
  if (!f.differentiable()) throw Error(ErrorKind::NotDifferentiable, "jet_of needs a differentiable oracle");
  Jet j;
  j.source = f;
  j.components.push_back(f);
  for (int k = 1; k <= order; ++k) j.components.push_back(j.components.back().derivative());
  return j;
}

Jet zero_jet(int order) { return jet_of(FunctionOracle::constant(0.0), order); }

Jet jet_from_components(std::vector<FunctionOracle> components) {
  if (components.empty()) throw Error(ErrorKind::InvalidParams, "jet needs at least one component");
  return Jet{std::move(components), std::nullopt};
}

std::vector<Complex> taylor_coefficients(const FunctionOracle& g, Complex center, int degree) {
  std::vector<Complex> out;
  FunctionOracle d = g;
  double fact = 1.0;
  for (int k = 0; k <= degree; ++k) {
    if (k > 0) {
      d = d.derivative();
      fact *= k;
    }
    out.push_back(d(center) / fact);
  }
  return out;
}

double seminorm(int k, const Jet& F, const Jet& G, const CompactSetDescriptor& set) {
  const FunctionOracle f = F.component(k);
  const FunctionOracle g = G.component(k);
  double m = 0.0;
  for (const auto& z : set.samples) m = std::max(m, std::abs(f(z) - g(z)));
  return m;
}

MetricValue d_metric(const Jet& F, const Jet& G, const CompactSetDescriptor& set, int nMax) {
  if (nMax < 0) throw Error(ErrorKind::InvalidParams, "N_max must be >= 0");
  MetricValue out;
  for (int k = 0; k <= nMax; ++k) {
    const double s = seminorm(k, F, G, set);
    out.seminorms.push_back(s);
    out.value += std::ldexp(s / (1.0 + s), -k);
  }
  out.tailBound = std::ldexp(1.0, -nMax);
  return out;
}

}  // namespace jetapprox
