#include "dsum/bernoulli.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>

namespace dsum {

namespace {

struct BernoulliTables {
  std::shared_mutex mu;
  std::vector<Rational> numbers{Rational(1)};
  std::deque<RationalPolynomial> polys;  // deque: stable references on growth
};

BernoulliTables& tables() {
  static BernoulliTables t;
  return t;
}

// Caller holds the unique lock. Recurrence sum_{j<=n} C(n+1, j) B_j = 0.
void extend_numbers(BernoulliTables& t, int n) {
  while (static_cast<int>(t.numbers.size()) <= n) {
    int m = static_cast<int>(t.numbers.size());
    Rational acc;
    for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * t.numbers[static_cast<size_t>(j)];
    t.numbers.push_back(-acc / Rational(m + 1));
  }
}

}  // namespace

Rational bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_number: negative index");
  auto& t = tables();
  {
    std::shared_lock lock(t.mu);
    if (static_cast<int>(t.numbers.size()) > n) return t.numbers[static_cast<size_t>(n)];
  }
  std::unique_lock lock(t.mu);
  extend_numbers(t, n);
  return t.numbers[static_cast<size_t>(n)];
}

const RationalPolynomial& bernoulli_poly(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_poly: negative index");
  auto& t = tables();
  {
    std::shared_lock lock(t.mu);
    if (static_cast<int>(t.polys.size()) > n) return t.polys[static_cast<size_t>(n)];
  }
  std::unique_lock lock(t.mu);
  extend_numbers(t, n);
  while (static_cast<int>(t.polys.size()) <= n) {
    int m = static_cast<int>(t.polys.size());
    std::vector<Rational> c(static_cast<size_t>(m) + 1);
    for (int r = 0; r <= m; ++r) c[static_cast<size_t>(r)] = binomial(m, r) * t.numbers[static_cast<size_t>(m - r)];
    t.polys.emplace_back(std::move(c));
  }
  return t.polys[static_cast<size_t>(n)];
}

Rational periodic_bernoulli(int n, const Rational& x) {
  if (n < 1) throw std::invalid_argument("periodic_bernoulli: n must be >= 1");
  Rational f = x.frac();
  if (n == 1) return f.is_zero() ? Rational(0) : f - Rational(1, 2);
  return bernoulli_poly(n).eval(f);
}

std::vector<Rational> integer_crossings(const Rational& slope, const Rational& offset, const Rational& lo,
                                        const Rational& hi) {
  if (slope.is_zero()) throw std::invalid_argument("periodic factor slope must be nonzero");
  if (hi < lo) throw std::invalid_argument("integration bounds must satisfy lo <= hi");
  std::vector<Rational> cuts{lo};
  Rational u0 = slope * lo + offset, u1 = slope * hi + offset;
  if (u1 < u0) std::swap(u0, u1);
  // Integers m with u0 < m < u1.
  mpz_class first = u0.floor() + 1;
  mpz_class last = u1.is_integer() ? mpz_class(u1.floor() - 1) : u1.floor();
  Rational inv = slope.inverse();
  std::vector<Rational> inner;
  for (mpz_class m = first; m <= last; ++m) inner.push_back((Rational(m) - offset) * inv);
  std::sort(inner.begin(), inner.end());
  cuts.insert(cuts.end(), inner.begin(), inner.end());
  if (hi != lo) cuts.push_back(hi);
  return cuts;
}

RationalPiecewise periodic_factor_piecewise(const PeriodicFactor& f, const Rational& lo, const Rational& hi) {
  if (f.n < 1) throw std::invalid_argument("periodic factor degree must be >= 1");
  std::vector<Rational> cuts = integer_crossings(f.slope, f.offset, lo, hi);
  std::vector<RationalPolynomial> pieces;
  const RationalPolynomial& bn = bernoulli_poly(f.n);
  for (size_t k = 0; k + 1 < cuts.size(); ++k) {
    Rational mid = (cuts[k] + cuts[k + 1]) * Rational(1, 2);
    mpz_class shift = (f.slope * mid + f.offset).floor();
    pieces.push_back(bn.compose_affine(f.slope, f.offset - Rational(shift)));
  }
  return RationalPiecewise(std::move(cuts), std::move(pieces));
}

Rational piecewise_product_integral(const RationalPolynomial& poly, std::span<const PeriodicFactor> factors,
                                    const Rational& lo, const Rational& hi) {
  if (hi < lo) return -piecewise_product_integral(poly, factors, hi, lo);
  RationalPiecewise acc = RationalPiecewise::single(poly, lo, hi);
  for (const auto& f : factors) acc = acc * periodic_factor_piecewise(f, lo, hi);
  return acc.integrate();
}

}  // namespace dsum
