#include "dsum/char_bernoulli.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace dsum {

namespace {

// Coefficient-wise root-of-unity accumulator for polynomials.
class PolyRootSum {
 public:
  explicit PolyRootSum(int order) : order_(order) {}

  void add(long long j, const RationalPolynomial& p) {
    const auto& c = p.coeffs();
    while (sums_.size() < c.size()) sums_.emplace_back(order_);
    for (size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) sums_[i].add(j, c[i]);
  }

  CycloPolynomial value(const Rational& scale) const {
    std::vector<Cyclotomic> c;
    c.reserve(sums_.size());
    for (const auto& s : sums_) c.push_back(s.value() * scale);
    return CycloPolynomial(std::move(c));
  }

 private:
  int order_;
  std::vector<RootSum> sums_;
};

}  // namespace

CycloPolynomial gen_bernoulli_poly(const DirichletCharacter& chi, int n) {
  if (n < 0) throw std::invalid_argument("gen_bernoulli_poly: negative degree");
  const long long k = chi.modulus();
  const RationalPolynomial& bn = bernoulli_poly(n);
  PolyRootSum acc(chi.order());
  Rational inv_k(1, k);
  for (long long a = 0; a < k; ++a) {
    int j = chi.value_exponent(a);
    if (j < 0) continue;
    acc.add(-j, bn.compose_affine(inv_k, Rational(a, k)));
  }
  return acc.value(Rational(k).pow(n - 1));
}

Cyclotomic gen_bernoulli_number(const DirichletCharacter& chi, int n) {
  CycloPolynomial p = gen_bernoulli_poly(chi, n);
  return p.is_zero() ? Cyclotomic(0) : p.coeffs()[0];
}

Cyclotomic gen_bernoulli_function(const DirichletCharacter& chi, int m, const Rational& x) {
  if (m < 1) throw std::invalid_argument("gen_bernoulli_function: m must be >= 1");
  const long long k = chi.modulus();
  RootSum acc(chi.order());
  for (long long n = 0; n < k; ++n) {
    int j = chi.value_exponent(n);
    if (j < 0) continue;
    acc.add(-j, periodic_bernoulli(m, (Rational(n) + x) / Rational(k)));
  }
  return acc.value() * Rational(k).pow(m - 1);
}

CycloPiecewise gen_bernoulli_piecewise(const DirichletCharacter& chi, int m, const Rational& slope,
                                       const Rational& offset, const Rational& lo, const Rational& hi) {
  if (m < 1) throw std::invalid_argument("gen_bernoulli_piecewise: m must be >= 1");
  const long long k = chi.modulus();
  const RationalPolynomial& bm = bernoulli_poly(m);
  std::vector<Rational> cuts = integer_crossings(slope, offset, lo, hi);
  std::vector<CycloPolynomial> pieces;
  Rational scale = Rational(k).pow(m - 1);
  Rational inner_slope = slope / Rational(k);
  for (size_t p = 0; p + 1 < cuts.size(); ++p) {
    Rational mid = (cuts[p] + cuts[p + 1]) * Rational(1, 2);
    Rational u_mid = slope * mid + offset;
    PolyRootSum acc(chi.order());
    for (long long n = 0; n < k; ++n) {
      int j = chi.value_exponent(n);
      if (j < 0) continue;
      Rational arg_offset = (Rational(n) + offset) / Rational(k);
      mpz_class shift = ((Rational(n) + u_mid) / Rational(k)).floor();
      acc.add(-j, bm.compose_affine(inner_slope, arg_offset - Rational(shift)));
    }
    pieces.push_back(acc.value(scale));
  }
  return CycloPiecewise(std::move(cuts), std::move(pieces));
}

GenBernoulliGrid::GenBernoulliGrid(const DirichletCharacter& chi, int m, long long den) {
  if (m < 1) throw std::invalid_argument("GenBernoulliGrid: m must be >= 1");
  if (den < 1) throw std::invalid_argument("GenBernoulliGrid: den must be >= 1");
  const long long k = chi.modulus();
  const long long period = k * den;
  std::vector<Rational> base(static_cast<size_t>(period));
  for (long long i = 0; i < period; ++i) base[static_cast<size_t>(i)] = periodic_bernoulli(m, Rational(i, period));
  Rational scale = Rational(k).pow(m - 1);
  values_.reserve(static_cast<size_t>(period));
  for (long long j = 0; j < period; ++j) {
    RootSum acc(chi.order());
    for (long long n = 0; n < k; ++n) {
      int e = chi.value_exponent(n);
      if (e < 0) continue;
      acc.add(-e, base[static_cast<size_t>((n * den + j) % period)]);
    }
    values_.push_back(acc.value() * scale);
  }
}

const Cyclotomic& GenBernoulliGrid::at(long long j) const {
  long long p = period();
  return values_[static_cast<size_t>(((j % p) + p) % p)];
}

std::shared_ptr<const GenBernoulliGrid> gen_bernoulli_grid(const DirichletCharacter& chi, int m, long long den) {
  using Key = std::tuple<long long, std::vector<long long>, int, long long>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const GenBernoulliGrid>> cache;
  Key key{chi.modulus(), chi.exponents(), m, den};
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto grid = std::make_shared<const GenBernoulliGrid>(chi, m, den);
  std::lock_guard lock(mu);
  return cache.emplace(std::move(key), std::move(grid)).first->second;
}

}  // namespace dsum
