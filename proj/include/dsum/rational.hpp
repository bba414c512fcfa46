#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dsum {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT(implicit)
  Rational(int n) : v_(n) {}                            // NOLINT(implicit)
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Throws std::domain_error("division by zero") when den == 0.
  Rational(long long num, long long den);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts "p/q", "p" and an optional leading sign. Throws
  /// std::invalid_argument on malformed input and std::domain_error on q == 0.
  static Rational parse(std::string_view text);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Largest integer <= *this.
  mpz_class floor() const;
  /// *this - floor(*this), always in [0, 1).
  Rational frac() const;
  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational pow(int e) const;

  /// Fits-in-long conversion for values already known to be small integers.
  long long to_integer() const;
  double to_double() const { return v_.get_d(); }
  long double to_long_double() const;

  /// Canonical "p/q" text; integers print without a denominator.
  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

/// make_rational(num, den): canonical reduced fraction.
inline Rational make_rational(long long num, long long den) { return Rational(num, den); }

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Binomial coefficient C(n, k) as an exact rational (0 outside 0 <= k <= n).
Rational binomial(long long n, long long k);
/// n! for n >= 0.
Rational factorial(long long n);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

}  // namespace dsum
