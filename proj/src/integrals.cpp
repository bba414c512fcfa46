#include "dsum/integrals.hpp"

#include "dsum/bernoulli.hpp"
#include "dsum/char_bernoulli.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dsum {

namespace {

Rational sign_pow(long long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

// Alternating multinomial sum of boundary terms, scaled by 1/(n_1!...n_r!).
// at_x(l, d) and at_0(l, d) give the degree-d factor l at the upper and lower
// limit. Terms with a > cutoff are accumulated separately.
template <class Scalar, class AtX, class At0>
SidePair<Scalar> boundary_sum(const ProductIntegralSpec& spec, long long cutoff, AtX at_x, At0 at_0) {
  const int r = spec.factors();
  const int last = r - 1;
  int total = 0;
  for (int l = 0; l < last; ++l) total += spec.degrees[static_cast<size_t>(l)];

  Scalar main_part(0), tail(0);

  for (int a = 0; a <= total; ++a) {
    const int top = spec.degrees[static_cast<size_t>(last)] + a + 1;
    Rational outer = sign_pow(a) * factorial(a) * spec.slopes[static_cast<size_t>(last)].pow(-a - 1) /
                     factorial(top);
    Scalar top_x = at_x(last, top);
    Scalar top_0 = at_0(last, top);
    Scalar acc(0);

    // Enumerate j_1 + ... + j_{r-1} = a with 0 <= j_l <= n_l.
    auto rec = [&](auto&& self, int l, int remaining, const Rational& w, const Scalar& px, const Scalar& p0) -> void {
      if (l == last) {
        if (remaining == 0) acc += w * (px * top_x - p0 * top_0);
        return;
      }
      const int n = spec.degrees[static_cast<size_t>(l)];
      const int hi = std::min(n, remaining);
      for (int jl = 0; jl <= hi; ++jl) {
        Rational wl = w * spec.slopes[static_cast<size_t>(l)].pow(jl) / (factorial(jl) * factorial(n - jl));
        self(self, l + 1, remaining - jl, wl, px * at_x(l, n - jl), p0 * at_0(l, n - jl));
      }
    };
    rec(rec, 0, a, Rational(1), Scalar(1), Scalar(1));

    if (a <= cutoff)
      main_part += acc * outer;
    else
      tail += acc * outer;
  }
  return {main_part, tail};
}

// B_d(b_l x + y_l) and B_d(y_l) tables, indexed [l][d].
struct RationalTables {
  std::vector<std::vector<Rational>> at_x, at_0;
};

RationalTables rational_tables(const ProductIntegralSpec& spec) {
  const int r = spec.factors();
  int total = 0;
  for (int l = 0; l + 1 < r; ++l) total += spec.degrees[static_cast<size_t>(l)];
  RationalTables t;
  for (int l = 0; l < r; ++l) {
    const size_t L = static_cast<size_t>(l);
    int hi = spec.degrees[L] + (l == r - 1 ? total + 1 : 0);
    Rational arg = spec.slopes[L] * spec.x + spec.offsets[L];
    std::vector<Rational> vx, v0;
    for (int d = 0; d <= hi; ++d) {
      vx.push_back(bernoulli_poly(d).eval(arg));
      v0.push_back(bernoulli_poly(d).eval(spec.offsets[L]));
    }
    t.at_x.push_back(std::move(vx));
    t.at_0.push_back(std::move(v0));
  }
  return t;
}

template <class V, class F1, class F2>
V eq24_left(int n, int m, const Rational& b1, const Rational& b2, F1 f1, F2 f2) {
  const int N = m + n + 1;
  V lhs = f1(0) * Rational(0);
  for (int a = 0; a <= n; ++a) {
    Rational w = sign_pow(a) * Rational(binomial(N, n - a)) * b1.pow(a) * b2.pow(-a - 1);
    lhs += f1(n - a) * f2(m + a + 1) * w;
  }
  for (int a = 0; a <= m; ++a) {
    Rational w = sign_pow(a) * Rational(binomial(N, m - a)) * b2.pow(a) * b1.pow(-a - 1);
    lhs -= f2(m - a) * f1(n + a + 1) * w;
  }
  return lhs;
}

// sum_a (-1)^a C(N, a) b1^a b2^(N-a) g1(N-a) g2(a)
template <class V, class G1, class G2>
V eq24_combination(int n, int m, const Rational& b1, const Rational& b2, G1 g1, G2 g2) {
  const int N = m + n + 1;
  V acc = g1(0) * Rational(0);
  for (int a = 0; a <= N; ++a) {
    Rational w = sign_pow(a) * Rational(binomial(N, a)) * b1.pow(a) * b2.pow(N - a);
    acc += g1(N - a) * g2(a) * w;
  }
  return acc;
}

Rational eq24_prefactor(int n, int m, const Rational& b1, const Rational& b2) {
  return sign_pow(m + 1) / (b1.pow(m + 1) * b2.pow(n + 1));
}

void require_nonzero(const Rational& b) {
  if (b.is_zero()) throw std::invalid_argument("slopes must be nonzero");
}

}  // namespace

void ProductIntegralSpec::validate() const {
  if (degrees.empty()) throw std::invalid_argument("integral spec needs at least one factor");
  if (slopes.size() != degrees.size() || offsets.size() != degrees.size())
    throw std::invalid_argument("degrees, slopes and offsets must have equal length");
  for (int d : degrees)
    if (d < 0) throw std::invalid_argument("degrees must be nonnegative");
  for (const auto& b : slopes) require_nonzero(b);
}

Rational ProductIntegralSpec::factorial_weight() const {
  Rational w(1);
  for (int d : degrees) w *= factorial(d);
  return w;
}

ProductIntegralSpec ProductIntegralSpec::permuted(const std::vector<int>& perm) const {
  if (perm.size() != degrees.size()) throw std::invalid_argument("permutation has wrong length");
  std::vector<int> seen(perm.size(), 0);
  ProductIntegralSpec out;
  out.x = x;
  for (int src : perm) {
    if (src < 0 || static_cast<size_t>(src) >= perm.size() || seen[static_cast<size_t>(src)]++)
      throw std::invalid_argument("not a permutation");
    out.degrees.push_back(degrees[static_cast<size_t>(src)]);
    out.slopes.push_back(slopes[static_cast<size_t>(src)]);
    out.offsets.push_back(offsets[static_cast<size_t>(src)]);
  }
  return out;
}

RationalPolynomial product_integral_direct_poly(const ProductIntegralSpec& spec) {
  spec.validate();
  RationalPolynomial prod = RationalPolynomial::constant(Rational(1));
  for (int l = 0; l < spec.factors(); ++l) {
    const size_t L = static_cast<size_t>(l);
    prod = prod * bernoulli_poly(spec.degrees[L]).compose_affine(spec.slopes[L], spec.offsets[L]);
  }
  return prod.integrate_from_zero();
}

Rational product_integral_direct(const ProductIntegralSpec& spec) {
  return product_integral_direct_poly(spec).eval(spec.x);
}

Rational product_integral_formula_scaled(const ProductIntegralSpec& spec) {
  spec.validate();
  RationalTables t = rational_tables(spec);
  auto at_x = [&](int l, int d) { return t.at_x[static_cast<size_t>(l)][static_cast<size_t>(d)]; };
  auto at_0 = [&](int l, int d) { return t.at_0[static_cast<size_t>(l)][static_cast<size_t>(d)]; };
  auto sides = boundary_sum<Rational>(spec, std::numeric_limits<long long>::max(), at_x, at_0);
  return sides.lhs;
}

Rational product_integral_formula(const ProductIntegralSpec& spec) {
  return product_integral_formula_scaled(spec) * spec.factorial_weight();
}

bool permutation_invariance_check(const ProductIntegralSpec& spec, const std::vector<int>& perm) {
  return product_integral_formula(spec) == product_integral_formula(spec.permuted(perm));
}

Rational three_factor_closed_form(int l, int m, int n, const Rational& x) {
  if (l < 0 || m < 0 || n < 0) throw std::invalid_argument("degrees must be nonnegative");
  auto Bx = [&](int d) { return bernoulli_poly(d).eval(x); };
  Rational total;
  for (int a = 0; a <= l + m; ++a) {
    Rational inner;
    for (int j = 0; j <= a; ++j) {
      int d1 = l - a + j, d2 = m - j, d3 = n + a + 1;
      if (d1 < 0 || d2 < 0) continue;
      Rational diff = Bx(d1) * Bx(d2) * Bx(d3) - bernoulli_number(d1) * bernoulli_number(d2) * bernoulli_number(d3);
      inner += Rational(binomial(a, j)) * diff / (factorial(d1) * factorial(d2) * factorial(d3));
    }
    total += sign_pow(a) * inner;
  }
  return total;
}

Cyclotomic char_product_integral_direct(const ProductIntegralSpec& spec,
                                        const std::vector<DirichletCharacter>& chars) {
  spec.validate();
  if (chars.size() != spec.degrees.size()) throw std::invalid_argument("one character per factor required");
  CycloPolynomial prod = CycloPolynomial::constant(Cyclotomic(1));
  for (int l = 0; l < spec.factors(); ++l) {
    const size_t L = static_cast<size_t>(l);
    prod = prod * gen_bernoulli_poly(chars[L], spec.degrees[L]).compose_affine(spec.slopes[L], spec.offsets[L]);
  }
  return prod.integrate_from_zero().eval(spec.x);
}

CharFormulaResult char_product_integral_formula(const ProductIntegralSpec& spec,
                                                const std::vector<DirichletCharacter>& chars) {
  spec.validate();
  if (chars.size() != spec.degrees.size()) throw std::invalid_argument("one character per factor required");
  for (int d : spec.degrees)
    if (d < 1) throw std::invalid_argument("character factors need degree >= 1");
  const int r = spec.factors();
  int total = 0;
  for (int l = 0; l + 1 < r; ++l) total += spec.degrees[static_cast<size_t>(l)];

  std::vector<std::vector<Cyclotomic>> vx(static_cast<size_t>(r)), v0(static_cast<size_t>(r));
  for (int l = 0; l < r; ++l) {
    const size_t L = static_cast<size_t>(l);
    int hi = spec.degrees[L] + (l == r - 1 ? total + 1 : 0);
    Rational arg = spec.slopes[L] * spec.x + spec.offsets[L];
    for (int d = 0; d <= hi; ++d) {
      CycloPolynomial p = gen_bernoulli_poly(chars[L], d);
      vx[L].push_back(p.eval(arg));
      v0[L].push_back(p.eval(spec.offsets[L]));
    }
  }
  auto at_x = [&](int l, int d) { return vx[static_cast<size_t>(l)][static_cast<size_t>(d)]; };
  auto at_0 = [&](int l, int d) { return v0[static_cast<size_t>(l)][static_cast<size_t>(d)]; };
  auto sides = boundary_sum<Cyclotomic>(spec, total - (r - 1), at_x, at_0);
  Rational w = spec.factorial_weight();
  return {(sides.lhs + sides.rhs) * w, sides.rhs * w};
}

SidePair<RationalPolynomial> two_factor_reciprocity_poly(int n, int m, const Rational& b1, const Rational& b2,
                                                         const Rational& y1, const Rational& y2) {
  if (n < 0 || m < 0) throw std::invalid_argument("n, m must be nonnegative");
  require_nonzero(b1);
  require_nonzero(b2);
  auto f1 = [&](int d) { return bernoulli_poly(d).compose_affine(b1, y1); };
  auto f2 = [&](int d) { return bernoulli_poly(d).compose_affine(b2, y2); };
  auto g1 = [&](int d) { return bernoulli_poly(d).eval(y1); };
  auto g2 = [&](int d) { return bernoulli_poly(d).eval(y2); };
  RationalPolynomial lhs = eq24_left<RationalPolynomial>(n, m, b1, b2, f1, f2);
  Rational rhs = eq24_combination<Rational>(n, m, b1, b2, g1, g2) * eq24_prefactor(n, m, b1, b2);
  return {lhs, RationalPolynomial::constant(rhs)};
}

SidePair<Rational> two_factor_reciprocity(int n, int m, const Rational& b1, const Rational& b2, const Rational& y1,
                                          const Rational& y2, const Rational& x) {
  if (n < 0 || m < 0) throw std::invalid_argument("n, m must be nonnegative");
  require_nonzero(b1);
  require_nonzero(b2);
  Rational u1 = b1 * x + y1, u2 = b2 * x + y2;
  auto f1 = [&](int d) { return bernoulli_poly(d).eval(u1); };
  auto f2 = [&](int d) { return bernoulli_poly(d).eval(u2); };
  auto g1 = [&](int d) { return bernoulli_poly(d).eval(y1); };
  auto g2 = [&](int d) { return bernoulli_poly(d).eval(y2); };
  Rational lhs = eq24_left<Rational>(n, m, b1, b2, f1, f2);
  Rational rhs = eq24_combination<Rational>(n, m, b1, b2, g1, g2) * eq24_prefactor(n, m, b1, b2);
  return {lhs, rhs};
}

RationalPolynomial x_independent_combination(int n, int m, const Rational& b1, const Rational& b2, const Rational& y1,
                                             const Rational& y2) {
  auto f1 = [&](int d) { return bernoulli_poly(d).compose_affine(b1, y1); };
  auto f2 = [&](int d) { return bernoulli_poly(d).compose_affine(b2, y2); };
  return eq24_combination<RationalPolynomial>(n, m, b1, b2, f1, f2);
}

SidePair<Rational> shifted_identity_28(int n, int m, const Rational& x, const Rational& y1, const Rational& y2) {
  if (n < 0 || m < 0) throw std::invalid_argument("n, m must be nonnegative");
  const int N = m + n + 1;
  auto B = [](int d, const Rational& u) { return bernoulli_poly(d).eval(u); };
  Rational lhs;
  for (int a = 0; a <= n; ++a)
    lhs += sign_pow(a) * Rational(binomial(N, n - a)) * B(n - a, x + y1) * B(m + a + 1, x + y2);
  for (int a = 0; a <= m; ++a)
    lhs -= sign_pow(a) * Rational(binomial(N, m - a)) * B(m - a, x + y2) * B(n + a + 1, x + y1);
  Rational d = y1 - y2;
  Rational rhs = sign_pow(m) * Rational(m + n + 1) * (y2 - y1) * B(m + n, d) +
                 sign_pow(m) * Rational(m + n) * B(m + n + 1, d);
  return {lhs, rhs};
}

SidePair<RationalPolynomial> bernoulli_convolution_identity(int p, const Rational& y) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  RationalPolynomial lhs;
  for (int a = 0; a <= p; ++a)
    lhs += bernoulli_poly(p - a) * (Rational(binomial(p, a)) * bernoulli_poly(a).eval(y));
  RationalPolynomial sum = RationalPolynomial::identity() + RationalPolynomial::constant(y);  // x + y
  RationalPolynomial rhs = (sum - RationalPolynomial::constant(Rational(1))) * Rational(p) *
                               bernoulli_poly(p - 1).compose_affine(Rational(1), y) -
                           bernoulli_poly(p).compose_affine(Rational(1), y) * Rational(p - 1);
  return {lhs, rhs};
}

ProductIntegralSpec symmetric_spec(const std::vector<int>& degrees, const std::vector<Rational>& offsets,
                                   const Rational& q) {
  if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
  if (degrees.size() != offsets.size()) throw std::invalid_argument("degrees and offsets must have equal length");
  ProductIntegralSpec s;
  s.degrees = degrees;
  s.offsets = offsets;
  s.x = q;
  for (const auto& y : offsets) {
    if (y == Rational(1, 2)) throw std::invalid_argument("offset 1/2 gives a zero slope");
    s.slopes.push_back((Rational(1) - Rational(2) * y) / q);
  }
  s.validate();
  return s;
}

Rational symmetric_case_17(const std::vector<int>& degrees, const std::vector<Rational>& offsets, const Rational& q) {
  ProductIntegralSpec spec = symmetric_spec(degrees, offsets, q);
  const int r = spec.factors();
  const int last = r - 1;
  int sum_all = 0;
  for (int d : degrees) sum_all += d;
  if ((sum_all + 1) % 2 == 0) return Rational(0);

  int total = sum_all - degrees[static_cast<size_t>(last)];
  auto B = [](int d, const Rational& u) { return bernoulli_poly(d).eval(u); };
  std::vector<Rational> c(static_cast<size_t>(r));
  for (int l = 0; l < r; ++l) c[static_cast<size_t>(l)] = Rational(1) - Rational(2) * offsets[static_cast<size_t>(l)];

  Rational result;
  for (int a = 0; a <= total; ++a) {
    const int top = degrees[static_cast<size_t>(last)] + a + 1;
    Rational outer =
        sign_pow(a) * c[static_cast<size_t>(last)].pow(-a - 1) / factorial(top) * B(top, offsets[static_cast<size_t>(last)]);
    Rational inner;
    auto rec = [&](auto&& self, int l, int remaining, const Rational& w) -> void {
      if (l == last) {
        if (remaining == 0) inner += w;
        return;
      }
      const int n = degrees[static_cast<size_t>(l)];
      for (int jl = 0; jl <= std::min(n, remaining); ++jl) {
        Rational f = c[static_cast<size_t>(l)].pow(jl) / (factorial(jl) * factorial(n - jl)) *
                     B(n - jl, offsets[static_cast<size_t>(l)]);
        self(self, l + 1, remaining - jl, w * f);
      }
    };
    rec(rec, 0, a, factorial(a));
    result += outer * inner;
  }
  return Rational(-2) * q * result;
}

SidePair<Cyclotomic> char_two_factor_reciprocity_36(int n, int m, const Rational& b1, const Rational& b2,
                                                    const Rational& y1, const Rational& y2, const Rational& x,
                                                    const DirichletCharacter& chi1, const DirichletCharacter& chi2) {
  if (n < 1 || m < 1) throw std::invalid_argument("n and m must be >= 1");
  require_nonzero(b1);
  require_nonzero(b2);
  const int N = m + n + 1;
  std::vector<CycloPolynomial> p1, p2;
  for (int d = 0; d <= N; ++d) {
    p1.push_back(gen_bernoulli_poly(chi1, d));
    p2.push_back(gen_bernoulli_poly(chi2, d));
  }
  Rational u1 = b1 * x + y1, u2 = b2 * x + y2;
  auto f1 = [&](int d) { return p1[static_cast<size_t>(d)].eval(u1); };
  auto f2 = [&](int d) { return p2[static_cast<size_t>(d)].eval(u2); };
  auto g1 = [&](int d) { return p1[static_cast<size_t>(d)].eval(y1); };
  auto g2 = [&](int d) { return p2[static_cast<size_t>(d)].eval(y2); };
  Cyclotomic lhs = eq24_left<Cyclotomic>(n, m, b1, b2, f1, f2);
  Cyclotomic rhs = eq24_combination<Cyclotomic>(n, m, b1, b2, g1, g2) * eq24_prefactor(n, m, b1, b2);
  return {lhs, rhs};
}

Rational apostol_link_middle(int n, int m, long long b1, long long b2, const Rational& x) {
  if (n < 0 || m < 0) throw std::invalid_argument("n, m must be nonnegative");
  const int p = m + n;
  const Rational B1(b1), B2(b2);
  auto B = [](int d, const Rational& u) { return bernoulli_poly(d).eval(u); };
  Rational total;
  for (int a = 0; a <= n; ++a)
    total += sign_pow(n - a) * Rational(binomial(p + 1, n - a)) * B1.pow(m + a + 1) * B2.pow(n - a) *
             B(n - a, B1 * x) * B(m + a + 1, B2 * x);
  for (int a = 0; a <= m; ++a)
    total += sign_pow(m - a) * Rational(binomial(p + 1, m - a)) * B2.pow(n + a + 1) * B1.pow(m - a) *
             B(m - a, B2 * x) * B(n + a + 1, B1 * x);
  Rational q(std::gcd(b1, b2));
  return total + q.pow(p + 1) * Rational(p) * bernoulli_number(p + 1);
}

Rational apostol_link_right(int n, int m, long long b1, long long b2) {
  if (n < 0 || m < 0) throw std::invalid_argument("n, m must be nonnegative");
  const int p = m + n;
  const Rational B1(b1), B2(b2);
  Rational total;
  for (int a = 0; a <= p + 1; ++a)
    total += sign_pow(a) * Rational(binomial(p + 1, a)) * B1.pow(a) * B2.pow(p + 1 - a) * bernoulli_number(p + 1 - a) *
             bernoulli_number(a);
  Rational q(std::gcd(b1, b2));
  return total + q.pow(p + 1) * Rational(p) * bernoulli_number(p + 1);
}

}  // namespace dsum
