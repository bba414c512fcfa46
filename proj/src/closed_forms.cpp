#include "dsum/closed_forms.hpp"

#include "dsum/bernoulli.hpp"
#include "dsum/char_bernoulli.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace dsum {

const Cyclotomic& cached_gen_bernoulli_number(const DirichletCharacter& chi, int n) {
  using Key = std::tuple<long long, std::vector<long long>, int>;
  static std::mutex mu;
  static std::map<Key, Cyclotomic> cache;
  Key key{chi.modulus(), chi.exponents(), n};
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Cyclotomic v = gen_bernoulli_number(chi, n);
  std::lock_guard lock(mu);
  // std::map never moves its nodes, so the reference stays valid.
  return cache.emplace(std::move(key), std::move(v)).first->second;
}

Rational dr_rhs(long long b, long long c) {
  Rational B(b), C(c);
  return Rational(-1, 4) + (B / C + C / B + Rational(1) / (B * C)) / Rational(12);
}

Rational dr1_rhs(int p, long long b, long long c) {
  Rational B(b), C(c), sum(0);
  for (int j = 0; j <= p + 1; ++j) {
    Rational term = binomial(p + 1, j) * B.pow(j) * C.pow(p + 1 - j) * bernoulli_number(p + 1 - j) * bernoulli_number(j);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum + Rational(p) * bernoulli_number(p + 1);
}

Cyclotomic dkr_rhs(const DirichletCharacter& chi) {
  return cached_gen_bernoulli_number(chi, 1) * cached_gen_bernoulli_number(chi.conjugate(), 1);
}

Cyclotomic binomial_char_product(int p, const Rational& B1, const Rational& C1, const DirichletCharacter& chi1,
                                 const DirichletCharacter& chi2) {
  DirichletCharacter chi1bar = chi1.conjugate();
  Cyclotomic sum(0);
  for (int j = 0; j <= p + 1; ++j) {
    const Cyclotomic& a = cached_gen_bernoulli_number(chi1bar, j);
    const Cyclotomic& b = cached_gen_bernoulli_number(chi2, p + 1 - j);
    if (a.is_zero() || b.is_zero()) continue;
    sum += (binomial(p + 1, j) * B1.pow(j) * C1.pow(p + 1 - j)) * (a * b);
  }
  return sum;
}

Cyclotomic cck_rhs(int p, long long b, long long c, const DirichletCharacter& chi) {
  const long long k = chi.modulus();
  Cyclotomic first = binomial_char_product(p, Rational(b), Rational(c), chi, chi);
  Rational scale = Rational(p, k) * (Rational(k).pow(p + 1) - Rational(1)) * bernoulli_number(p + 1);
  return first + scale * (chi(c) * chi.conjugate()(-b));
}

Cyclotomic character_double_sum(int deg, const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                                long long h_end, long long j_end, const Rational& u_h, const Rational& u_j) {
  const int e1 = chi1.order(), e2 = chi2.order();
  const int L = std::lcm(e1, e2);
  RootSum acc(L);
  for (long long h = 1; h <= h_end; ++h) {
    int a1 = chi1.value_exponent(h);
    if (a1 < 0) continue;
    for (long long j = 1; j <= j_end; ++j) {
      int a2 = chi2.value_exponent(j);
      if (a2 < 0) continue;
      Rational v = periodic_bernoulli(deg, u_j * Rational(j) + u_h * Rational(h));
      acc.add(static_cast<long long>(a1) * (L / e1) - static_cast<long long>(a2) * (L / e2), v);
    }
  }
  return acc.value();
}

Cyclotomic rp1_rhs(int p, long long b, long long c, const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
  if (chi1.modulus() != chi2.modulus()) throw std::invalid_argument("rp1_rhs: characters need a common modulus");
  const long long k = chi1.modulus();
  const long long q = gcd_ll(b, c);
  Cyclotomic first = binomial_char_product(p, Rational(b), Rational(c), chi1, chi2);
  Cyclotomic dbl = character_double_sum(p + 1, chi1, chi2, k - 1, k - 1, Rational(b, q * k), Rational(c, q * k));
  return first + (Rational(p) * Rational(q).pow(p + 1) * Rational(k).pow(p - 1)) * dbl;
}

Cyclotomic rp2_rhs(int p, long long b, long long c, const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                   bool inclusive) {
  const long long k1 = chi1.modulus(), k2 = chi2.modulus();
  const long long q = gcd_ll(b, c);
  Cyclotomic first = binomial_char_product(p, Rational(b * k2), Rational(c * k1), chi1, chi2);
  long long h_end = inclusive ? k1 : k1 - 1;
  long long j_end = inclusive ? k2 : k2 - 1;
  Cyclotomic dbl = character_double_sum(p + 1, chi1, chi2, h_end, j_end, Rational(b, q * k1), Rational(c, q * k2));
  return first + (Rational(p) * Rational(q).pow(p + 1) * Rational(k1 * k2).pow(p)) * dbl;
}

Cyclotomic rp3_rhs(int p, long long b, long long c, const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
  Rational B(b), C(c);
  Cyclotomic sum(0);
  for (int j = 0; j <= p + 1; ++j) {
    const Cyclotomic& a = cached_gen_bernoulli_number(chi1, p + 1 - j);
    const Cyclotomic& d = cached_gen_bernoulli_number(chi2, j);
    if (a.is_zero() || d.is_zero()) continue;
    sum += (binomial(p + 1, j) * C.pow(j) * B.pow(p + 1 - j)) * (a * d);
  }
  return sum;
}

Cyclotomic lek2_closed(int p, long long b, long long c, const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
  if (chi1.modulus() != chi2.modulus()) throw std::invalid_argument("lek2_closed: characters need a common modulus");
  const long long k = chi1.modulus();
  Cyclotomic dbl = character_double_sum(p + 1, chi1, chi2, k - 1, k - 1, Rational(b, k), Rational(c, k));
  return Rational(k, c).pow(p) * dbl;
}

Cyclotomic lek3_closed(int p, long long b, long long c, const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
  const long long k1 = chi1.modulus(), k2 = chi2.modulus();
  Cyclotomic dbl = character_double_sum(p + 1, chi1, chi2, k1, k2, Rational(b, k1), Rational(c, k2));
  return Rational(k2, c).pow(p) * dbl;
}

Rational raabe_lhs(int p, long long c, const Rational& x) {
  Rational sum(0);
  for (long long m = 0; m < c; ++m) sum += periodic_bernoulli(p + 1, (Rational(m) + x) / Rational(c));
  return sum;
}

Rational raabe_rhs(int p, long long c, const Rational& x) {
  return Rational(c).pow(-p) * periodic_bernoulli(p + 1, x);
}

}  // namespace dsum
