#pragma once

#include "dsum/rational.hpp"

#include <complex>
#include <span>
#include <vector>

namespace dsum {

/// The e-th cyclotomic field Q(zeta_e), modelled as Q[x]/(Phi_e(x)).
struct CycloField {
  int order = 1;
  int degree = 1;                 // phi(order)
  std::vector<long long> modulus; // Phi_e, ascending coefficients, monic, size degree + 1
};

/// Shared, lazily built field descriptor. Thread-safe.
const CycloField& cyclo_field(int order);

/// Euler's totient.
int euler_phi(long long n);

/// Element of Q(zeta_e) in the reduced power basis {1, zeta, ..., zeta^(phi(e)-1)}.
///
/// Binary operations between elements of different orders embed both operands
/// into Q(zeta_lcm) first; equality does the same, so values compare as field
/// elements regardless of the order they happen to be stored at.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(const Rational& r);  // NOLINT(implicit): Q embeds as order 1
  Cyclotomic(int r) : Cyclotomic(Rational(r)) {}  // NOLINT(implicit)

  /// Polynomial in zeta_e (any length); reduced modulo Phi_e.
  Cyclotomic(int order, std::vector<Rational> poly_in_zeta);

  /// zeta_e^(j mod e).
  static Cyclotomic root(int order, long long j);

  int order() const { return field_->order; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error when a non-constant coefficient is nonzero.
  Rational to_rational() const;

  /// Image in Q(zeta_target); requires order() | target.
  Cyclotomic embed(int target_order) const;
  /// zeta_order^j * (*this), without a general multiplication.
  Cyclotomic mul_root(long long j) const;
  Cyclotomic inverse() const;
  /// Complex conjugate (zeta -> zeta^-1).
  Cyclotomic conj() const;

  /// Value at zeta_e = exp(2 pi i / e).
  std::complex<long double> to_complex() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator*(const Rational& b, Cyclotomic a) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(const CycloField* f, std::vector<Rational> reduced) : field_(f), coeffs_(std::move(reduced)) {}
  const CycloField* field_;
  std::vector<Rational> coeffs_;  // exactly field_->degree entries
};

/// Accumulates sum_j r_j * zeta_e^j in Q[x]/(x^e - 1) and reduces once at the end.
/// Character sums are sums of roots of unity times rationals, so this avoids a
/// field multiplication per term.
class RootSum {
 public:
  explicit RootSum(int order);
  int order() const { return order_; }
  void add(long long j, const Rational& r);
  /// += zeta_e^j * v, with v.order() | e.
  void add(long long j, const Cyclotomic& v);
  void add(long long j, const Cyclotomic& v, const Rational& scale);
  Cyclotomic value() const;

 private:
  int order_;
  std::vector<Rational> buckets_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

}  // namespace dsum
