#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsum/bernoulli.hpp"
#include "oracle.hpp"

#include <random>

using namespace dsum;

TEST_CASE("Bernoulli numbers against Akiyama-Tanigawa") {
  auto ref = oracle::bernoulli_numbers(40);
  for (int n = 0; n <= 40; ++n) CHECK(bernoulli_number(n) == ref[n]);
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  CHECK(bernoulli_number(13).is_zero());
}

TEST_CASE("Bernoulli polynomials against the double-sum formula") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 12);
  for (int n = 0; n <= 14; ++n) {
    for (int t = 0; t < 5; ++t) {
      Rational x(num(rng), den(rng));
      CHECK(bernoulli_poly(n).eval(x) == oracle::bernoulli_poly_at(n, x));
    }
  }
  CHECK(bernoulli_poly(2) == RationalPolynomial({Rational(1, 6), Rational(-1), Rational(1)}));
}

TEST_CASE("Bernoulli polynomial identities") {
  for (int n = 1; n <= 12; ++n) {
    // B_n(x + 1) - B_n(x) = n x^(n-1)
    RationalPolynomial diff = bernoulli_poly(n).compose_affine(Rational(1), Rational(1)) - bernoulli_poly(n);
    std::vector<Rational> mono(n, Rational(0));
    mono[n - 1] = Rational(n);
    CHECK(diff == RationalPolynomial(mono));
    // B_n'(x) = n B_{n-1}(x)
    RationalPolynomial scaled = bernoulli_poly(n - 1);
    scaled *= Rational(n);
    CHECK(bernoulli_poly(n).derivative() == scaled);
    // B_n(1 - x) = (-1)^n B_n(x)
    RationalPolynomial refl = bernoulli_poly(n).compose_affine(Rational(-1), Rational(1));
    RationalPolynomial sign = bernoulli_poly(n);
    sign *= Rational(n % 2 ? -1 : 1);
    CHECK(refl == sign);
  }
}

TEST_CASE("periodic Bernoulli function") {
  CHECK(periodic_bernoulli(1, Rational(0)) == Rational(0));
  CHECK(periodic_bernoulli(1, Rational(3)) == Rational(0));
  CHECK(periodic_bernoulli(1, Rational(1, 4)) == Rational(-1, 4));
  CHECK(periodic_bernoulli(1, Rational(-1, 4)) == Rational(1, 4));
  CHECK(periodic_bernoulli(2, Rational(7, 3)) == bernoulli_poly(2).eval(Rational(1, 3)));
  CHECK(periodic_bernoulli(2, Rational(2)) == Rational(1, 6));
  CHECK_THROWS_AS(periodic_bernoulli(0, Rational(1)), std::invalid_argument);
}

TEST_CASE("integer crossings") {
  auto cuts = integer_crossings(Rational(2), Rational(0), Rational(0), Rational(1));
  REQUIRE(cuts.size() == 3);
  CHECK(cuts[1] == Rational(1, 2));
  auto neg = integer_crossings(Rational(-3, 2), Rational(1, 4), Rational(0), Rational(2));
  for (size_t i = 1; i + 1 < neg.size(); ++i) CHECK((Rational(-3, 2) * neg[i] + Rational(1, 4)).is_integer());
  CHECK(std::is_sorted(neg.begin(), neg.end()));
}

TEST_CASE("piecewise integrals against quadrature") {
  // int_0^1 x B̄_2(2x) dx; pieces [0,1/2], [1/2,1] are smooth.
  PeriodicFactor f{2, Rational(2), Rational(0)};
  Rational exact = piecewise_product_integral(RationalPolynomial::identity(), std::span(&f, 1), Rational(0), Rational(1));
  long double quad = oracle::integrate([](long double x) { return x * oracle::bbar(2, 2 * x); }, 0, 1, 2);
  CHECK(std::fabs(exact.to_long_double() - quad) < 1e-15L);
  CHECK(exact == Rational(0));

  // Three factors, breakpoints all on the grid (1/12)Z.
  std::vector<PeriodicFactor> fs{{1, Rational(3), Rational(1, 4)}, {3, Rational(-2), Rational(0)}, {2, Rational(4), Rational(1, 3)}};
  Rational e2 = piecewise_product_integral(RationalPolynomial::constant(Rational(1)), fs, Rational(-1), Rational(2));
  long double q2 = oracle::integrate(
      [](long double x) {
        return oracle::bbar(1, 3 * x + 0.25L) * oracle::bbar(3, -2 * x) * oracle::bbar(2, 4 * x + 1.0L / 3);
      },
      -1, 2, 36);
  CHECK(std::fabs(e2.to_long_double() - q2) < 1e-13L);
}

TEST_CASE("piecewise integral reverses sign with swapped limits") {
  PeriodicFactor f{3, Rational(5, 2), Rational(1, 7)};
  Rational a = piecewise_product_integral(RationalPolynomial::identity(), std::span(&f, 1), Rational(0), Rational(3));
  Rational b = piecewise_product_integral(RationalPolynomial::identity(), std::span(&f, 1), Rational(3), Rational(0));
  CHECK(a == -b);
}
