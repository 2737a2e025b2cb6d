#pragma once

#include "jetapprox/error.hpp"
#include "jetapprox/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace jetapprox {

/// Negative-power part sum_r coeffs[r] (z - pole)^(-r) at one finite pole.
template <typename Real>
struct PrincipalPart {
  using Scalar = std::complex<Real>;

  Scalar pole;
  std::map<int, Scalar> coeffs;  // r >= 1, no zero entries

  int order() const { return coeffs.empty() ? 0 : coeffs.rbegin()->first; }

  Scalar coefficient(int r) const {
    auto it = coeffs.find(r);
    return it == coeffs.end() ? Scalar(0) : it->second;
  }
};

/// One term c (z - pole)^(-order) taken out of a rational function.
template <typename Real>
struct PoleTerm {
  std::complex<Real> pole;
  int order;
  std::complex<Real> coefficient;
};

/// Rational function with prescribed finite poles in the canonical
/// partial-fraction basis: a polynomial part plus one principal part per pole.
///
/// The representation is kept normalized: parts are sorted by pole (real part,
/// then imaginary part), poles are pairwise distinct, and coefficients whose
/// modulus is below kPruneRelative times the largest coefficient modulus are
/// dropped.
template <typename Real>
class RationalFunction {
 public:
  using Scalar = std::complex<Real>;
  using Part = PrincipalPart<Real>;

  static constexpr Real kPruneRelative = Real(1e-15);

  RationalFunction() = default;

  RationalFunction(Polynomial<Real> poly) : poly_(std::move(poly)) { normalize(); }  // NOLINT

  RationalFunction(Polynomial<Real> poly, std::vector<Part> parts)
      : poly_(std::move(poly)), parts_(std::move(parts)) {
    normalize();
  }

  static RationalFunction pole_term(Scalar pole, int order, Scalar c = Scalar(1)) {
    if (order < 1) throw Error(ErrorKind::InvalidParams, "pole order must be >= 1");
    Part part{pole, {{order, c}}};
    return RationalFunction({}, {part});
  }

  const Polynomial<Real>& polynomial_part() const { return poly_; }
  const std::vector<Part>& principal_parts() const { return parts_; }

  std::vector<Scalar> poles() const {
    std::vector<Scalar> out;
    out.reserve(parts_.size());
    for (const Part& p : parts_) out.push_back(p.pole);
    return out;
  }

  /// Coefficient of (z - a)^(-r); zero when a is not a stored pole.
  Scalar coefficient(Scalar a, int r) const {
    for (const Part& p : parts_)
      if (p.pole == a) return p.coefficient(r);
    return Scalar(0);
  }

  Real max_abs_coeff() const {
    Real m = poly_.max_abs_coeff();
    for (const Part& p : parts_)
      for (const auto& [r, c] : p.coeffs) m = std::max(m, std::abs(c));
    return m;
  }

  bool is_zero() const { return poly_.is_zero() && parts_.empty(); }

  Scalar operator()(Scalar z) const;

  RationalFunction& operator+=(const RationalFunction& o) {
    poly_ += o.poly_;
    parts_.insert(parts_.end(), o.parts_.begin(), o.parts_.end());
    normalize();
    return *this;
  }

  RationalFunction& operator*=(Scalar s) {
    poly_ *= s;
    for (Part& p : parts_)
      for (auto& [r, c] : p.coeffs) c *= s;
    normalize();
    return *this;
  }

  RationalFunction& operator-=(const RationalFunction& o) { return *this += o * Scalar(-1); }

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, Scalar s) { return a *= s; }
  friend RationalFunction operator*(Scalar s, RationalFunction a) { return a *= s; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    if (!(a.poly_ == b.poly_) || a.parts_.size() != b.parts_.size()) return false;
    for (std::size_t i = 0; i < a.parts_.size(); ++i)
      if (a.parts_[i].pole != b.parts_[i].pole || a.parts_[i].coeffs != b.parts_[i].coeffs)
        return false;
    return true;
  }

 private:
  void normalize();

  Polynomial<Real> poly_;
  std::vector<Part> parts_;
};

template <typename Real>
void RationalFunction<Real>::normalize() {
  auto finite = [](Scalar c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); };
  for (Eigen::Index k = 0; k < poly_.coeffs().size(); ++k)
    if (!finite(poly_.coeffs()(k)))
      throw Error(ErrorKind::InvalidParams, "non-finite polynomial coefficient");

  auto pole_less = [](const Scalar& a, const Scalar& b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  };
  std::stable_sort(parts_.begin(), parts_.end(),
                   [&](const Part& a, const Part& b) { return pole_less(a.pole, b.pole); });

  std::vector<Part> merged;
  for (Part& p : parts_) {
    if (!finite(p.pole)) throw Error(ErrorKind::InvalidParams, "non-finite pole");
    for (const auto& [r, c] : p.coeffs) {
      if (r < 1) throw Error(ErrorKind::InvalidParams, "principal part order must be >= 1");
      if (!finite(c)) throw Error(ErrorKind::InvalidParams, "non-finite principal coefficient");
    }
    if (!merged.empty() && merged.back().pole == p.pole) {
      for (const auto& [r, c] : p.coeffs) merged.back().coeffs[r] += c;
    } else {
      merged.push_back(std::move(p));
    }
  }

  parts_.clear();
  Real threshold = kPruneRelative * std::max(poly_.max_abs_coeff(), [&] {
    Real m = 0;
    for (const Part& p : merged)
      for (const auto& [r, c] : p.coeffs) m = std::max(m, std::abs(c));
    return m;
  }());
  poly_ = poly_.pruned(threshold);
  for (Part& p : merged) {
    std::erase_if(p.coeffs, [&](const auto& kv) {
      return kv.second == Scalar(0) || std::abs(kv.second) < threshold;
    });
    if (!p.coeffs.empty()) parts_.push_back(std::move(p));
  }
}

/// Evaluates the polynomial part by Horner's scheme and each principal part
/// by Horner's scheme in w = 1/(z - pole).
template <typename Real>
std::complex<Real> evaluate(const RationalFunction<Real>& f, std::complex<Real> z) {
  using Scalar = std::complex<Real>;
  Scalar acc = f.polynomial_part()(z);
  for (const auto& part : f.principal_parts()) {
    const Scalar diff = z - part.pole;
    if (diff == Scalar(0))
      throw Error(ErrorKind::PoleEvaluation, "evaluation at a pole center");
    const Scalar w = Scalar(1) / diff;
    Scalar inner(0);
    for (int r = part.order(); r >= 1; --r) inner = (inner + part.coefficient(r)) * w;
    acc += inner;
  }
  return acc;
}

template <typename Real>
std::complex<Real> RationalFunction<Real>::operator()(Scalar z) const {
  return evaluate(*this, z);
}

template <typename Real>
RationalFunction<Real> differentiate(const RationalFunction<Real>& f) {
  using Scalar = std::complex<Real>;
  std::vector<PrincipalPart<Real>> parts;
  for (const auto& part : f.principal_parts()) {
    PrincipalPart<Real> d{part.pole, {}};
    for (const auto& [r, c] : part.coeffs) d.coeffs[r + 1] = c * Scalar(Real(-r));
    parts.push_back(std::move(d));
  }
  return RationalFunction<Real>(differentiate(f.polynomial_part()), std::move(parts));
}

template <typename Real>
RationalFunction<Real> differentiate(RationalFunction<Real> f, int times) {
  for (int i = 0; i < times; ++i) f = differentiate(f);
  return f;
}

/// Coefficient of (z - a)^(-r) in f, i.e. the residue of f(z)(z - a)^(r - 1) at a.
template <typename Real>
std::complex<Real> residue_coefficient(const RationalFunction<Real>& f, std::complex<Real> a,
                                       int r) {
  if (r < 1) throw Error(ErrorKind::InvalidParams, "residue order must be >= 1");
  return f.coefficient(a, r);
}

template <typename Real>
struct StripResult {
  RationalFunction<Real> stripped;
  std::vector<PoleTerm<Real>> removed;  // ordered by pole list order, then r
};

/// Removes the coefficients of (z - a_i)^(-r), 1 <= r <= order, at every
/// listed finite pole. What is left has `order` exact primitives in R_L.
template <typename Real>
StripResult<Real> strip_principal_parts(const RationalFunction<Real>& f, int order,
                                        std::span<const std::complex<Real>> poles) {
  if (order < 1) throw Error(ErrorKind::InvalidParams, "strip order must be >= 1");
  StripResult<Real> out;
  std::vector<PrincipalPart<Real>> kept;
  for (const auto& part : f.principal_parts()) {
    const bool listed = std::find(poles.begin(), poles.end(), part.pole) != poles.end();
    PrincipalPart<Real> rest{part.pole, {}};
    for (const auto& [r, c] : part.coeffs) {
      if (listed && r <= order)
        out.removed.push_back({part.pole, r, c});
      else
        rest.coeffs[r] = c;
    }
    if (!rest.coeffs.empty()) kept.push_back(std::move(rest));
  }
  std::stable_sort(out.removed.begin(), out.removed.end(), [&](const auto& x, const auto& y) {
    auto ix = std::find(poles.begin(), poles.end(), x.pole) - poles.begin();
    auto iy = std::find(poles.begin(), poles.end(), y.pole) - poles.begin();
    return ix != iy ? ix < iy : x.order < y.order;
  });
  out.stripped = RationalFunction<Real>(f.polynomial_part(), std::move(kept));
  return out;
}

/// Primitive with zero polynomial constant term. Fails when a logarithm would
/// be needed.
template <typename Real>
RationalFunction<Real> antidifferentiate(const RationalFunction<Real>& f) {
  using Scalar = std::complex<Real>;
  std::vector<PrincipalPart<Real>> parts;
  for (const auto& part : f.principal_parts()) {
    PrincipalPart<Real> p{part.pole, {}};
    for (const auto& [r, c] : part.coeffs) {
      if (r == 1)
        throw Error(ErrorKind::ResidueObstruction,
                    "nonzero order-1 coefficient at a pole; primitive needs a logarithm");
      p.coeffs[r - 1] = c / Scalar(Real(-(r - 1)));
    }
    parts.push_back(std::move(p));
  }
  return RationalFunction<Real>(antidifferentiate(f.polynomial_part()), std::move(parts));
}

/// N-fold primitive H with H^(N) = f and H^(r)(a) = init[r] for r < N.
template <typename Real>
RationalFunction<Real> nth_primitive(const RationalFunction<Real>& f, int order,
                                     std::complex<Real> a,
                                     std::span<const std::complex<Real>> init) {
  using Scalar = std::complex<Real>;
  if (order < 1) throw Error(ErrorKind::InvalidParams, "primitive order must be >= 1");
  if (int(init.size()) != order)
    throw Error(ErrorKind::InvalidParams, "need exactly one initial value per derivative order");
  RationalFunction<Real> h = f;
  for (int step = 1; step <= order; ++step) {
    h = antidifferentiate(h);
    // h is now the derivative of order (order - step) of the final primitive.
    const Scalar target = init[std::size_t(order - step)];
    h += RationalFunction<Real>(Polynomial<Real>::constant(target - evaluate(h, a)));
  }
  return h;
}

/// Largest coefficient-wise modulus difference over both representations.
template <typename Real>
Real max_coefficient_difference(const RationalFunction<Real>& f, const RationalFunction<Real>& g) {
  Real m = 0;
  const int deg = std::max(f.polynomial_part().degree(), g.polynomial_part().degree());
  for (int k = 0; k <= deg; ++k)
    m = std::max(m, std::abs(f.polynomial_part().coeff(k) - g.polynomial_part().coeff(k)));
  auto compare = [&](const RationalFunction<Real>& x, const RationalFunction<Real>& y) {
    for (const auto& part : x.principal_parts())
      for (const auto& [r, c] : part.coeffs)
        m = std::max(m, std::abs(c - y.coefficient(part.pole, r)));
  };
  compare(f, g);
  compare(g, f);
  return m;
}

template <typename Real>
bool approx_equal(const RationalFunction<Real>& f, const RationalFunction<Real>& g, Real tol) {
  return max_coefficient_difference(f, g) <= tol;
}

/// The set of finite poles is contained in `allowed` (structural R_L membership).
template <typename Real>
bool poles_within(const RationalFunction<Real>& f, std::span<const std::complex<Real>> allowed) {
  for (const auto& part : f.principal_parts())
    if (std::find(allowed.begin(), allowed.end(), part.pole) == allowed.end()) return false;
  return true;
}

using Complex = std::complex<double>;
using Poly = Polynomial<double>;
using Rational = RationalFunction<double>;
using PrincipalPartD = PrincipalPart<double>;
using RemovedTerm = PoleTerm<double>;

}  // namespace jetapprox
