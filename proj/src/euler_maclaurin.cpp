#include "dsum/euler_maclaurin.hpp"

#include "dsum/bernoulli.hpp"
#include "dsum/char_bernoulli.hpp"

#include <stdexcept>

namespace dsum {

Cyclotomic char_periodic_product_integral(const RationalPolynomial& poly, const std::vector<CharPeriodicFactor>& factors,
                                          const Rational& lo, const Rational& hi) {
  if (hi < lo) return -char_periodic_product_integral(poly, factors, hi, lo);
  if (lo == hi) return Cyclotomic(0);
  CycloPiecewise acc = CycloPiecewise::single(to_cyclo(poly), lo, hi);
  for (const auto& f : factors) {
    if (f.slope.is_zero()) throw std::invalid_argument("char_periodic_product_integral: zero slope");
    acc = acc * gen_bernoulli_piecewise(f.chi, f.m, f.slope, f.offset, lo, hi);
  }
  return acc.integrate();
}

Cyclotomic em_primed_sum(const DirichletCharacter& chi, const RationalPolynomial& f, const Rational& alpha,
                         const Rational& beta) {
  if (beta < alpha) throw std::invalid_argument("em_primed_sum: alpha > beta");
  mpz_class first = alpha.floor();
  if (!alpha.is_integer()) first += 1;
  mpz_class last = beta.floor();
  const int e = chi.order();
  RootSum acc(e);
  for (mpz_class n = first; n <= last; ++n) {
    Rational x(n);
    long long nn = x.to_integer();
    int j = chi.value_exponent(nn);
    if (j < 0) continue;
    Rational v = f.eval(x);
    if (x == alpha || x == beta) v *= Rational(1, 2);
    acc.add(j, v);
  }
  return acc.value();
}

Cyclotomic em_right_side(const DirichletCharacter& chi, const RationalPolynomial& f, const Rational& alpha,
                         const Rational& beta, int l) {
  if (l < 0) throw std::invalid_argument("em_right_side: l must be >= 0");
  DirichletCharacter chibar = chi.conjugate();
  const Rational sign_chi(chi.parity());
  Cyclotomic boundary(0);
  RationalPolynomial d = f;
  for (int j = 0; j <= l; ++j) {
    Rational w = Rational((j + 1) % 2 ? -1 : 1) / factorial(j + 1);
    Cyclotomic at_beta = gen_bernoulli_function(chibar, j + 1, beta) * d.eval(beta);
    Cyclotomic at_alpha = gen_bernoulli_function(chibar, j + 1, alpha) * d.eval(alpha);
    boundary += w * (at_beta - at_alpha);
    d = d.derivative();
  }
  // d is now f^(l+1).
  Cyclotomic integral =
      char_periodic_product_integral(d, {CharPeriodicFactor{chibar, l + 1, Rational(1), Rational(0)}}, alpha, beta);
  Rational w = Rational(l % 2 ? -1 : 1) / factorial(l + 1);
  return sign_chi * (boundary + w * integral);
}

}  // namespace dsum
