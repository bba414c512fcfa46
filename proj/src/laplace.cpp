#include "dsum/laplace.hpp"

#include "dsum/bernoulli.hpp"
#include "dsum/char_bernoulli.hpp"
#include "dsum/closed_forms.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dsum {

namespace {

constexpr long double kTail = 1e-14L;
constexpr int kMaxBlocks = 1000000;

void require_positive(long double s) {
  if (!(s > 0)) throw std::invalid_argument("Laplace transform needs s > 0");
}

/// sum_i P^(i)(x) / s^(i+1) for a polynomial with exact coefficients.
template <class Poly>
auto derivative_series(const Poly& p, const Rational& x, long double s) {
  using V = decltype(p.eval(x));
  std::vector<V> values;
  for (Poly d = p; !d.is_zero(); d = d.derivative()) values.push_back(d.eval(x));
  if constexpr (std::is_same_v<V, Rational>) {
    long double acc = 0, inv = 1 / s, w = inv;
    for (const auto& v : values) {
      acc += v.to_long_double() * w;
      w *= inv;
    }
    return acc;
  } else {
    std::complex<long double> acc = 0;
    long double inv = 1 / s, w = inv;
    for (const auto& v : values) {
      acc += v.to_complex() * w;
      w *= inv;
    }
    return acc;
  }
}

/// int_a^b e^(-s(v-a)) P(v) dv.
template <class Poly>
auto block_integral(const Poly& p, const Rational& a, const Rational& b, long double s) {
  long double width = (b - a).to_long_double();
  return derivative_series(p, a, s) - std::exp(-s * width) * derivative_series(p, b, s);
}

}  // namespace

long double laplace16_lhs(int n, const Rational& t, const Rational& y, long double s) {
  require_positive(s);
  if (n < 1) throw std::invalid_argument("laplace16: n must be >= 1");
  if (t.sign() <= 0) throw std::invalid_argument("laplace16: t must be > 0");
  // v = t u + y turns the integral into (1/t) int_y^inf e^(-sigma (v - y)) B̄_n(v) dv.
  const long double sigma = s / t.to_long_double();
  const RationalPolynomial& bn = bernoulli_poly(n);
  long double total = 0;
  Rational start(y.floor());
  if (!y.is_integer()) {
    Rational end = start + Rational(1);
    total += block_integral(bn.compose_affine(Rational(1), -start), y, end, sigma);
    start = end;
  }
  // Every full block carries the same bracket, damped by e^(-sigma (N - y)).
  const long double unit = block_integral(bn, Rational(0), Rational(1), sigma);
  const long double ratio = std::exp(-sigma);
  long double damp = std::exp(-sigma * (start - y).to_long_double());
  for (int blocks = 0; blocks < kMaxBlocks; ++blocks) {
    total += damp * unit;
    damp *= ratio;
    long double tail = std::fabs(unit) * damp / (1 - ratio);
    if (tail < kTail * std::max<long double>(1, std::fabs(total))) break;
  }
  return total / t.to_long_double();
}

long double laplace16_rhs(int n, const Rational& t, const Rational& y, long double s) {
  require_positive(s);
  if (n < 1) throw std::invalid_argument("laplace16: n must be >= 1");
  const long double T = t.to_long_double();
  const long double u = s / T;
  const Rational fy = y.frac();
  long double sum = 0, upow = 1;
  for (int a = 0; a <= n; ++a) {
    sum += bernoulli_poly(a).eval(fy).to_long_double() * upow / factorial(a).to_long_double();
    upow *= u;
  }
  sum -= u * std::exp(fy.to_long_double() * u) / std::expm1(u);
  return factorial(n).to_long_double() * std::pow(T, n) / std::pow(s, n + 1) * sum;
}

long double laplace16_series(int n, const Rational& t, const Rational& y, long double s, int mu) {
  require_positive(s);
  if (n < 1) throw std::invalid_argument("laplace16: n must be >= 1");
  const long double u = s / t.to_long_double();
  if (!(u < 2 * std::acos(-1.0L))) throw std::invalid_argument("laplace16 series: needs s/t < 2 pi");
  const Rational fy = y.frac();
  long double sum = 0;
  for (int a = n + 1; a <= mu; ++a)
    sum += bernoulli_poly(a).eval(fy).to_long_double() / factorial(a).to_long_double() * std::pow(u, a);
  return -factorial(n).to_long_double() * std::pow(t.to_long_double(), n) / std::pow(s, n + 1) * sum;
}

long double laplace_product_lhs(int m, int n, long double s) {
  require_positive(s);
  if (m < 0 || n < 1) throw std::invalid_argument("laplace-product: need m >= 0 and n >= 1");
  const RationalPolynomial& bm = bernoulli_poly(m);
  const RationalPolynomial& bn = bernoulli_poly(n);
  long double total = 0;
  long double damp = 1;
  const long double ratio = std::exp(-s);
  // Block j: e^(-sj) int_0^1 e^(-sv) B_m(v + j) B_n(v) dv. The integrand grows
  // like j^m, so stop only after the peak of j^m e^(-sj) has passed.
  const long double peak = m / s;
  for (long long j = 0; j < kMaxBlocks; ++j) {
    RationalPolynomial q = bm.compose_affine(Rational(1), Rational(j)) * bn;
    long double term = damp * block_integral(q, Rational(0), Rational(1), s);
    total += term;
    damp *= ratio;
    if (j > peak + 1) {
      // Bound the remaining blocks by a geometric series in the current decay.
      long double grow = std::pow((j + 2.0L) / (j + 1.0L), m) * ratio;
      if (grow < 1 && std::fabs(term) * grow / (1 - grow) < kTail * std::max<long double>(1, std::fabs(total))) break;
    }
  }
  return total;
}

long double laplace_product_rhs(int m, int n, long double s) {
  require_positive(s);
  if (m < 0 || n < 1) throw std::invalid_argument("laplace-product: need m >= 0 and n >= 1");
  const long double g = 1 / std::expm1(s);
  // g^(q) as a polynomial in g: (P(g))' = P'(g) (-g - g^2).
  std::vector<std::vector<long double>> gpoly{{0, 1}};
  for (int q = 1; q <= m; ++q) {
    const auto& prev = gpoly.back();
    std::vector<long double> next(prev.size() + 1, 0);
    for (size_t i = 1; i < prev.size(); ++i) {
      long double c = prev[i] * static_cast<long double>(i);
      next[i] -= c;
      next[i + 1] -= c;
    }
    gpoly.push_back(std::move(next));
  }
  auto gderiv = [&](int q) {
    long double acc = 0;
    for (size_t i = gpoly[q].size(); i-- > 0;) acc = acc * g + gpoly[q][i];
    return acc;
  };
  // d^q/ds^q s^-n = (-n)(-n-1)...(-n-q+1) s^(-n-q).
  auto spow_deriv = [&](int q) {
    long double c = 1;
    for (int i = 0; i < q; ++i) c *= static_cast<long double>(-n - i);
    return c * std::pow(s, -n - q);
  };
  long double total = 0;
  for (int r = 0; r <= m; ++r) {
    long double poly = 0;
    for (int a = 0; a <= n; ++a)
      poly += (binomial(n, a) * factorial(n + r - a) * bernoulli_number(a)).to_long_double() / std::pow(s, n + 1 + r - a);
    long double leibniz = 0;
    for (int q = 0; q <= r; ++q) leibniz += binomial(r, q).to_long_double() * spow_deriv(q) * gderiv(r - q);
    long double inner = poly - factorial(n).to_long_double() * (r % 2 ? -1 : 1) * leibniz;
    total += (binomial(m, r) * bernoulli_number(m - r)).to_long_double() * inner;
  }
  return total;
}

std::complex<long double> laplace_char_lhs(const DirichletCharacter& chi, int n, const Rational& t, long double s) {
  require_positive(s);
  if (n < 1) throw std::invalid_argument("laplace-char: n must be >= 1");
  if (t.sign() <= 0) throw std::invalid_argument("laplace-char: t must be > 0");
  const long long k = chi.modulus();
  const long double sigma = s / t.to_long_double();
  // One period [0, k] of B̄_{n,chi}(v), split at the integers.
  CycloPiecewise period = gen_bernoulli_piecewise(chi, n, Rational(1), Rational(0), Rational(0), Rational(k));
  std::complex<long double> unit = 0;
  const auto& cuts = period.cuts();
  for (size_t i = 0; i < period.pieces().size(); ++i) {
    long double a = cuts[i].to_long_double();
    unit += std::exp(-sigma * a) * block_integral(period.pieces()[i], cuts[i], cuts[i + 1], sigma);
  }
  const long double ratio = std::exp(-sigma * static_cast<long double>(k));
  std::complex<long double> total = 0;
  long double damp = 1;
  for (int blocks = 0; blocks < kMaxBlocks; ++blocks) {
    total += damp * unit;
    damp *= ratio;
    long double tail = std::abs(unit) * damp / (1 - ratio);
    if (tail < kTail * std::max<long double>(1, std::abs(total))) break;
  }
  return total / (t.to_long_double() * factorial(n).to_long_double());
}

std::complex<long double> laplace_char_rhs(const DirichletCharacter& chi, int n, const Rational& t, long double s) {
  require_positive(s);
  if (n < 1) throw std::invalid_argument("laplace-char: n must be >= 1");
  const long long k = chi.modulus();
  const long double T = t.to_long_double();
  std::complex<long double> first = 0;
  for (int a = 0; a <= n; ++a)
    first += cached_gen_bernoulli_number(chi, a).to_complex() / factorial(a).to_long_double() * std::pow(T / s, n - a);
  first /= s;
  DirichletCharacter chibar = chi.conjugate();
  std::complex<long double> second = 0;
  const long double denom = std::expm1(static_cast<long double>(k) * s / T);
  for (long long j = 0; j < k; ++j) {
    if (chibar.value_exponent(j) < 0) continue;
    second += chibar(j).to_complex() * std::exp(static_cast<long double>(j) * s / T) / denom;
  }
  return first - std::pow(T, n - 1) / std::pow(s, n) * second;
}

}  // namespace dsum
