#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace jetapprox {

/// Dense univariate polynomial with complex coefficients, stored in the
/// monomial basis: coeffs()(k) multiplies z^k.
///
/// The coefficient vector never carries trailing exact zeros, so the zero
/// polynomial is the empty vector and degree() is size() - 1.
template <typename Real>
class Polynomial {
 public:
  using Scalar = std::complex<Real>;
  using Coefficients = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Polynomial() = default;

  explicit Polynomial(Coefficients coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(Eigen::Index(coeffs.size())) {
    Eigen::Index k = 0;
    for (const Scalar& c : coeffs) coeffs_(k++) = c;
    trim();
  }

  static Polynomial constant(Scalar c) { return Polynomial{c}; }

  static Polynomial monomial(int k, Scalar c = Scalar(1)) {
    Coefficients v = Coefficients::Zero(k + 1);
    v(k) = c;
    return Polynomial(std::move(v));
  }

  static Polynomial from_span(std::span<const Scalar> coeffs) {
    Coefficients v(Eigen::Index(coeffs.size()));
    for (std::size_t k = 0; k < coeffs.size(); ++k) v(Eigen::Index(k)) = coeffs[k];
    return Polynomial(std::move(v));
  }

  int degree() const { return int(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 0; }
  const Coefficients& coeffs() const { return coeffs_; }

  Scalar coeff(int k) const {
    return (k >= 0 && k < coeffs_.size()) ? coeffs_(k) : Scalar(0);
  }

  Scalar operator()(Scalar z) const {
    Scalar acc(0);
    for (Eigen::Index k = coeffs_.size() - 1; k >= 0; --k) acc = acc * z + coeffs_(k);
    return acc;
  }

  Real max_abs_coeff() const {
    Real m = 0;
    for (Eigen::Index k = 0; k < coeffs_.size(); ++k) m = std::max(m, std::abs(coeffs_(k)));
    return m;
  }

  /// Drops every coefficient of modulus below `threshold`.
  Polynomial pruned(Real threshold) const {
    Coefficients v = coeffs_;
    for (Eigen::Index k = 0; k < v.size(); ++k)
      if (std::abs(v(k)) < threshold) v(k) = Scalar(0);
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) {
      Coefficients v = Coefficients::Zero(o.coeffs_.size());
      v.head(coeffs_.size()) = coeffs_;
      coeffs_ = std::move(v);
    }
    coeffs_.head(o.coeffs_.size()) += o.coeffs_;
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) { return *this += o * Scalar(-1); }

  Polynomial& operator*=(Scalar s) {
    coeffs_ *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, Scalar s) { return a *= s; }
  friend Polynomial operator*(Scalar s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Coefficients v = Coefficients::Zero(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (Eigen::Index i = 0; i < a.coeffs_.size(); ++i)
      for (Eigen::Index j = 0; j < b.coeffs_.size(); ++j) v(i + j) += a.coeffs_(i) * b.coeffs_(j);
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_.size() == b.coeffs_.size() && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim() {
    Eigen::Index n = coeffs_.size();
    while (n > 0 && coeffs_(n - 1) == Scalar(0)) --n;
    if (n != coeffs_.size()) coeffs_.conservativeResize(n);
  }

  Coefficients coeffs_;
};

template <typename Real>
Polynomial<Real> differentiate(const Polynomial<Real>& p) {
  using Scalar = std::complex<Real>;
  if (p.degree() < 1) return {};
  typename Polynomial<Real>::Coefficients v(p.degree());
  for (int k = 1; k <= p.degree(); ++k) v(k - 1) = p.coeff(k) * Scalar(Real(k));
  return Polynomial<Real>(std::move(v));
}

template <typename Real>
Polynomial<Real> differentiate(Polynomial<Real> p, int times) {
  for (int i = 0; i < times && !p.is_zero(); ++i) p = differentiate(p);
  return p;
}

/// Primitive with zero constant term.
template <typename Real>
Polynomial<Real> antidifferentiate(const Polynomial<Real>& p) {
  using Scalar = std::complex<Real>;
  if (p.is_zero()) return {};
  typename Polynomial<Real>::Coefficients v = Polynomial<Real>::Coefficients::Zero(p.degree() + 2);
  for (int k = 0; k <= p.degree(); ++k) v(k + 1) = p.coeff(k) / Scalar(Real(k + 1));
  return Polynomial<Real>(std::move(v));
}

/// Converts sum_k shifted[k] (z - center)^k to the monomial basis (Horner
/// composition with z - center).
template <typename Real>
Polynomial<Real> from_shifted_basis(std::span<const std::complex<Real>> shifted,
                                    std::complex<Real> center) {
  using Scalar = std::complex<Real>;
  const Polynomial<Real> linear{-center, Scalar(1)};
  Polynomial<Real> acc;
  for (auto it = shifted.rbegin(); it != shifted.rend(); ++it)
    acc = acc * linear + Polynomial<Real>::constant(*it);
  return acc;
}

}  // namespace jetapprox
