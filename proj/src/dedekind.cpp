#include "dsum/dedekind.hpp"

#include "dsum/bernoulli.hpp"
#include "dsum/char_bernoulli.hpp"

#include <stdexcept>

namespace dsum {

namespace {

void require_positive_c(long long c) {
  if (c < 1) throw std::invalid_argument("c must be a positive integer");
}

Rational sawtooth(long long num, long long den) { return periodic_bernoulli(1, Rational(num, den)); }

// sum_{n=start}^{end-1} chi1(n) * B̄_{m,chi2}(n * mult / den) * weight(n)
template <class Weight>
Cyclotomic twisted_sum(const DirichletCharacter& chi1, const DirichletCharacter& chi2, int m, long long mult,
                       long long den, long long start, long long end, Weight weight) {
  auto grid = gen_bernoulli_grid(chi2, m, den);
  int e = static_cast<int>(lcm_ll(chi1.order(), chi2.order()));
  long long stride1 = e / chi1.order();
  RootSum acc(e);
  for (long long n = start; n < end; ++n) {
    int j = chi1.value_exponent(n);
    if (j < 0) continue;
    Rational w = weight(n);
    if (w.is_zero()) continue;
    acc.add(j * stride1, grid->at(n * mult), w);
  }
  return acc.value();
}

}  // namespace

Rational classical_dedekind_sum(long long b, long long c) {
  require_positive_c(c);
  Rational s;
  for (long long j = 0; j < c; ++j) s += sawtooth(j, c) * sawtooth(b * j, c);
  return s;
}

Rational apostol_sum(int p, long long b, long long c) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  require_positive_c(c);
  Rational s;
  for (long long j = 0; j < c; ++j) s += periodic_bernoulli(p, Rational(b * j, c)) * sawtooth(j, c);
  return s;
}

Cyclotomic char_pair_sum(int p, long long b, long long c, const DirichletCharacter& chi1,
                         const DirichletCharacter& chi2) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  require_positive_c(c);
  if (chi1.modulus() != chi2.modulus()) throw std::invalid_argument("characters must share one modulus");
  const long long k = chi1.modulus();
  return twisted_sum(chi1, chi2, p, b, c, 0, c * k, [&](long long n) { return sawtooth(n, c * k); });
}

Cyclotomic char_single_sum(int p, long long b, long long c, const DirichletCharacter& chi) {
  return char_pair_sum(p, b, c, chi, chi);
}

Cyclotomic hat_sum(int p, long long b, long long c, const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  require_positive_c(c);
  const long long span = c * chi1.modulus() * chi2.modulus();
  return twisted_sum(chi1, chi2, p, b, c, 0, span, [&](long long n) { return sawtooth(n, span); });
}

Cyclotomic tilde_sum(int p, long long b, long long c, const DirichletCharacter& chi1,
                     const DirichletCharacter& chi2) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  require_positive_c(c);
  const long long k1 = chi1.modulus(), k2 = chi2.modulus();
  return twisted_sum(chi1, chi2, p, b * k2, c * k1, 0, c * k1, [&](long long n) { return sawtooth(n, c * k1); });
}

Cyclotomic char_weighted_power_sum(int p, long long b, long long c, const DirichletCharacter& chi1,
                                   const DirichletCharacter& chi2) {
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  require_positive_c(c);
  if (chi1.modulus() != chi2.modulus()) throw std::invalid_argument("characters must share one modulus");
  const long long k = chi1.modulus();
  return twisted_sum(chi1, chi2, p + 1, b, c, 1, c * k, [](long long) { return Rational(1); });
}

Cyclotomic char_weighted_power_double_sum(int p, long long b, long long c, const DirichletCharacter& chi1,
                                          const DirichletCharacter& chi2) {
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  require_positive_c(c);
  if (chi1.modulus() != chi2.modulus()) throw std::invalid_argument("characters must share one modulus");
  const long long k = chi1.modulus();
  int e = static_cast<int>(lcm_ll(chi1.order(), chi2.order()));
  long long s1 = e / chi1.order(), s2 = e / chi2.order();
  RootSum acc(e);
  for (long long h = 1; h < k; ++h) {
    int jh = chi1.value_exponent(h);
    if (jh < 0) continue;
    for (long long j = 1; j < k; ++j) {
      int jj = chi2.value_exponent(j);
      if (jj < 0) continue;
      acc.add(jh * s1 - jj * s2, periodic_bernoulli(p + 1, Rational(c * j + b * h, k)));
    }
  }
  return acc.value() * (Rational(k) / Rational(c)).pow(p);
}

Cyclotomic tilde_weighted_power_sum(int p, long long b, long long c, const DirichletCharacter& chi1,
                                    const DirichletCharacter& chi2) {
  if (p < 0) throw std::invalid_argument("p must be >= 0");
  require_positive_c(c);
  const long long k1 = chi1.modulus(), k2 = chi2.modulus();
  return twisted_sum(chi1, chi2, p + 1, b * k2, c * k1, 1, c * k1 + 1, [](long long) { return Rational(1); });
}

std::optional<SumFamily> parse_sum_family(const std::string& name) {
  if (name == "classical") return SumFamily::Classical;
  if (name == "apostol") return SumFamily::Apostol;
  if (name == "char_single") return SumFamily::CharSingle;
  if (name == "char_pair") return SumFamily::CharPair;
  if (name == "hat") return SumFamily::Hat;
  if (name == "tilde") return SumFamily::Tilde;
  return std::nullopt;
}

std::string to_string(SumFamily f) {
  switch (f) {
    case SumFamily::Classical: return "classical";
    case SumFamily::Apostol: return "apostol";
    case SumFamily::CharSingle: return "char_single";
    case SumFamily::CharPair: return "char_pair";
    case SumFamily::Hat: return "hat";
    case SumFamily::Tilde: return "tilde";
  }
  return "unknown";
}

int reflection_sign(int p, const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
  int s = (p + 1) % 2 == 0 ? 1 : -1;
  return s * chi1.parity() * chi2.parity();
}

}  // namespace dsum
