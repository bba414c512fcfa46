#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsum/char_bernoulli.hpp"
#include "dsum/integrals.hpp"
#include "oracle.hpp"

#include <random>

using namespace dsum;
using oracle::cplx;

namespace {

ProductIntegralSpec make(std::vector<int> n, std::vector<Rational> b, std::vector<Rational> y, Rational x) {
  ProductIntegralSpec s{std::move(n), std::move(b), std::move(y), x};
  s.validate();
  return s;
}

long double bpoly(int n, long double x) {
  static const auto B = oracle::bernoulli_numbers(40);
  long double acc = 0;
  for (int r = 0; r <= n; ++r) acc += binomial(n, r).to_long_double() * B[n - r].to_long_double() * std::pow(x, r);
  return acc;
}

long double quad(const ProductIntegralSpec& s) {
  auto f = [&](long double z) {
    long double v = 1;
    for (int i = 0; i < s.factors(); ++i) v *= bpoly(s.degrees[i], s.slopes[i].to_long_double() * z + s.offsets[i].to_long_double());
    return v;
  };
  return oracle::integrate(f, 0, s.x.to_long_double(), 4);
}

}  // namespace

TEST_CASE("direct integral against Gauss-Legendre") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> deg(0, 4), num(-9, 9), den(1, 9);
  for (int t = 0; t < 40; ++t) {
    int r = 1 + t % 3;
    ProductIntegralSpec s;
    for (int i = 0; i < r; ++i) {
      s.degrees.push_back(deg(rng));
      int b = 0;
      while (b == 0) b = num(rng);
      s.slopes.emplace_back(b, den(rng));
      s.offsets.emplace_back(num(rng), den(rng));
    }
    s.x = Rational(num(rng), den(rng));
    long double q = quad(s);
    long double d = product_integral_direct(s).to_long_double();
    CHECK(std::fabs(d - q) <= 1e-9L * std::max<long double>(1, std::fabs(q)));
  }
}

TEST_CASE("formula equals direct integration") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> deg(0, 6), num(-9, 9), den(1, 9);
  for (int t = 0; t < 60; ++t) {
    int r = 1 + t % 4;
    ProductIntegralSpec s;
    for (int i = 0; i < r; ++i) {
      s.degrees.push_back(deg(rng));
      int b = 0;
      while (b == 0) b = num(rng);
      s.slopes.emplace_back(b, den(rng));
      s.offsets.emplace_back(num(rng), den(rng));
    }
    s.x = Rational(num(rng), den(rng));
    CHECK(product_integral_formula(s) == product_integral_direct(s));
    CHECK(product_integral_formula_scaled(s) * s.factorial_weight() == product_integral_formula(s));
    CHECK(product_integral_direct_poly(s).eval(s.x) == product_integral_direct(s));
  }
}

TEST_CASE("worked examples") {
  // int_0^1 B_3(-z+1) B_4(3z-1) B_16(5z-2) dz = 0
  auto a = make({3, 4, 16}, {Rational(-1), Rational(3), Rational(5)}, {Rational(1), Rational(-1), Rational(-2)}, Rational(1));
  CHECK(product_integral_direct(a).is_zero());
  CHECK(product_integral_formula(a).is_zero());

  // (1/(3!4!15!)) int_0^1 B_3(-z+1) B_4(3z-1) B_15(-3z+2) dz
  //   = -2 sum_{a=0}^{7} B_{16+a}(2)/(16+a)! sum_i C(a,i) 3^(-i-1) B_{3-i} B_{4-a+i}(-1) / ((3-i)! (4-a+i)!)
  auto b = make({3, 4, 15}, {Rational(-1), Rational(3), Rational(-3)}, {Rational(1), Rational(-1), Rational(2)}, Rational(1));
  Rational shown(0);
  for (int s = 0; s <= 7; ++s) {
    Rational inner(0);
    for (int i = 0; i <= s; ++i) {
      if (3 - i < 0 || 4 - s + i < 0) continue;
      inner += binomial(s, i) * Rational(3).pow(-i - 1) * oracle::bernoulli_poly_at(3 - i, Rational(0)) *
               oracle::bernoulli_poly_at(4 - s + i, Rational(-1)) / (factorial(3 - i) * factorial(4 - s + i));
    }
    shown += oracle::bernoulli_poly_at(16 + s, Rational(2)) / factorial(16 + s) * inner;
  }
  shown *= Rational(-2);
  CHECK(product_integral_direct(b) / b.factorial_weight() == shown);
  CHECK(product_integral_formula_scaled(b) == shown);
  CHECK_FALSE(shown.is_zero());
}

TEST_CASE("three-factor closed form") {
  for (int l = 0; l <= 4; ++l)
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n)
        for (Rational x : {Rational(1), Rational(1, 2), Rational(-3, 4)}) {
          auto s = make({l, m, n}, {Rational(1), Rational(1), Rational(1)}, {Rational(0), Rational(0), Rational(0)}, x);
          CHECK(three_factor_closed_form(l, m, n, x) == product_integral_direct(s) / s.factorial_weight());
        }
}

TEST_CASE("permutation invariance") {
  auto s = make({2, 5, 1, 3}, {Rational(1, 2), Rational(-3), Rational(7, 4), Rational(2)},
                {Rational(1, 3), Rational(0), Rational(-2, 5), Rational(1)}, Rational(3, 2));
  std::vector<int> perm{0, 1, 2, 3};
  while (std::next_permutation(perm.begin(), perm.end())) CHECK(permutation_invariance_check(s, perm));
}

TEST_CASE("validation") {
  ProductIntegralSpec bad{{1, 2}, {Rational(1)}, {Rational(0), Rational(0)}, Rational(1)};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  ProductIntegralSpec zero{{1}, {Rational(0)}, {Rational(0)}, Rational(1)};
  CHECK_THROWS_AS(zero.validate(), std::invalid_argument);
  ProductIntegralSpec neg{{-1}, {Rational(1)}, {Rational(0)}, Rational(1)};
  CHECK_THROWS_AS(neg.validate(), std::invalid_argument);
}

TEST_CASE("character integrals against quadrature") {
  auto c3 = parse_character("3:1"), c5 = parse_character("5:1");
  auto s = make({2, 3}, {Rational(1, 2), Rational(-2)}, {Rational(1, 3), Rational(1)}, Rational(5, 2));
  std::vector<DirichletCharacter> chars{c3, c5};
  // Evaluate B_{n,chi} in floats from its defining sum, not from the library polynomial.
  auto val = [](const DirichletCharacter& chi, int n, long double x) {
    const long long k = chi.modulus();
    cplx acc = 0;
    for (long long a = 0; a < k; ++a) acc += std::conj(oracle::chi_value(chi, a)) * bpoly(n, (a + x) / k);
    return acc * std::pow(static_cast<long double>(k), n - 1);
  };
  auto re = [&](long double z) { return (val(c3, 2, z / 2 + 1.0L / 3) * val(c5, 3, -2 * z + 1)).real(); };
  auto im = [&](long double z) { return (val(c3, 2, z / 2 + 1.0L / 3) * val(c5, 3, -2 * z + 1)).imag(); };
  cplx ref(oracle::integrate(re, 0, 2.5L, 4), oracle::integrate(im, 0, 2.5L, 4));
  CHECK(oracle::close(char_product_integral_direct(s, chars).to_complex(), ref, 1e-10L));
  auto f = char_product_integral_formula(s, chars);
  CHECK(f.value == char_product_integral_direct(s, chars));
  CHECK(f.tail.is_zero());
}

TEST_CASE("two-factor identities") {
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      auto v = two_factor_reciprocity(n, m, Rational(2, 3), Rational(-5, 2), Rational(1, 7), Rational(3), Rational(4, 5));
      CHECK(v.lhs == v.rhs);
      auto w = shifted_identity_28(n, m, Rational(-1, 3), Rational(2, 5), Rational(-7, 4));
      CHECK(w.lhs == w.rhs);
      RationalPolynomial c = x_independent_combination(n, m, Rational(3), Rational(1, 2), Rational(0), Rational(1, 4));
      CHECK(c.degree() <= 0);
    }
  for (int p = 1; p <= 8; ++p) {
    auto v = bernoulli_convolution_identity(p, Rational(2, 7));
    CHECK(v.lhs == v.rhs);
  }
}

TEST_CASE("symmetric specialization") {
  std::vector<int> even_case{1, 2, 2};  // 1 + 2 + 2 + 1 even
  std::vector<Rational> ys{Rational(1, 3), Rational(-2), Rational(3, 4)};
  CHECK(symmetric_case_17(even_case, ys, Rational(2)).is_zero());
  auto s = symmetric_spec(even_case, ys, Rational(2));
  CHECK(product_integral_direct(s).is_zero());
  std::vector<int> odd_case{1, 2, 3};
  auto t = symmetric_spec(odd_case, ys, Rational(-3, 2));
  CHECK(symmetric_case_17(odd_case, ys, Rational(-3, 2)) == product_integral_direct(t) / t.factorial_weight());
  CHECK_THROWS_AS(symmetric_case_17(odd_case, {Rational(1, 2), Rational(0), Rational(0)}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(symmetric_case_17(odd_case, ys, Rational(0)), std::invalid_argument);
}

TEST_CASE("character two-factor relation and the Apostol link") {
  auto c3 = parse_character("3:1"), c4 = parse_character("4:1");
  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= 3; ++m) {
      auto v = char_two_factor_reciprocity_36(n, m, Rational(2), Rational(-1, 3), Rational(1, 2), Rational(0),
                                              Rational(5, 3), c3, c4);
      CHECK(v.lhs == v.rhs);
    }
  CHECK_THROWS_AS(char_two_factor_reciprocity_36(0, 1, Rational(1), Rational(1), Rational(0), Rational(0), Rational(0), c3, c4),
                  std::invalid_argument);
  for (int n = 0; n <= 4; ++n)
    for (int m = 0; m <= 4; ++m) {
      if ((n + m) % 2 == 0) continue;
      CHECK(apostol_link_middle(n, m, 3, 5, Rational(2, 7)) == apostol_link_right(n, m, 3, 5));
    }
}
