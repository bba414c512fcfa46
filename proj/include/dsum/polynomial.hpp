#pragma once

#include "dsum/cyclotomic.hpp"
#include "dsum/rational.hpp"

#include <initializer_list>
#include <vector>

namespace dsum {

/// Dense univariate polynomial, coefficient i multiplies x^i. Trailing zeros
/// are trimmed; the zero polynomial has no coefficients.
///
/// Scalar is Rational or Cyclotomic.
template <class Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& s) { return Polynomial(std::vector<Scalar>{s}); }
  /// The identity polynomial x.
  static Polynomial identity() { return Polynomial(std::vector<Scalar>{Scalar(0), Scalar(1)}); }

  const std::vector<Scalar>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Scalar coeff(size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }

  template <class X>
  auto eval(const X& x) const {
    using R = decltype(Scalar(0) * x);
    R acc = R(0);
    for (size_t i = c_.size(); i-- > 0;) {
      acc *= x;
      acc += c_[i];
    }
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long long>(i));
    return Polynomial(std::move(d));
  }

  /// Antiderivative vanishing at 0.
  Polynomial integrate_from_zero() const {
    if (c_.empty()) return {};
    std::vector<Scalar> r(c_.size() + 1, Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] * Rational(1, static_cast<long long>(i + 1));
    return Polynomial(std::move(r));
  }

  /// P(a*x + d).
  Polynomial compose_affine(const Rational& a, const Rational& d) const {
    Polynomial lin(std::vector<Scalar>{Scalar(d), Scalar(a)});
    Polynomial acc;
    for (size_t i = c_.size(); i-- > 0;) {
      acc = acc * lin;
      acc += constant(c_[i]);
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Scalar> c_;
};

using RationalPolynomial = Polynomial<Rational>;
using CycloPolynomial = Polynomial<Cyclotomic>;

/// Coefficient-wise lift of a rational polynomial into Q(zeta).
inline CycloPolynomial to_cyclo(const RationalPolynomial& p) {
  std::vector<Cyclotomic> c;
  c.reserve(p.coeffs().size());
  for (const auto& r : p.coeffs()) c.emplace_back(r);
  return CycloPolynomial(std::move(c));
}

}  // namespace dsum
