#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsum/char_bernoulli.hpp"
#include "oracle.hpp"

using namespace dsum;

TEST_CASE("B_{1,chi} for the odd character mod 3") {
  auto chi = parse_character("3:1");
  CHECK(gen_bernoulli_number(chi, 1) == Cyclotomic(Rational(-1, 3)));
  CHECK(gen_bernoulli_number(chi, 1) * gen_bernoulli_number(chi.conjugate(), 1) == Cyclotomic(Rational(1, 9)));
  CHECK(gen_bernoulli_number(chi, 0).is_zero());
}

TEST_CASE("generalized Bernoulli numbers against the classical definition") {
  for (long long k = 1; k <= 9; ++k)
    for (const auto& chi : enumerate_characters(k))
      for (int n = 0; n <= 8; ++n) {
        if (chi.is_principal() && k > 1) continue;
        auto ours = gen_bernoulli_number(chi, n).to_complex();
        CHECK(oracle::close(ours, oracle::gen_bernoulli_number(chi, n), 1e-12L));
      }
  // k = 1 reproduces the ordinary numbers.
  auto triv = parse_character("1:0");
  for (int n = 0; n <= 10; ++n) CHECK(gen_bernoulli_number(triv, n) == Cyclotomic(bernoulli_number(n)));
}

TEST_CASE("parity vanishing of B_{n,chi}") {
  for (long long k : {3, 4, 5, 7, 8})
    for (const auto& chi : enumerate_characters(k, CharacterFilter::NonprincipalPrimitive))
      for (int n = 1; n <= 9; ++n)
        if ((n % 2 == 0) != (chi.parity() == 1)) CHECK(gen_bernoulli_number(chi, n).is_zero());
}

TEST_CASE("generalized polynomial has degree at most n - 1") {
  for (const auto& chi : enumerate_characters(5, CharacterFilter::NonprincipalPrimitive))
    for (int n = 1; n <= 6; ++n) CHECK(gen_bernoulli_poly(chi, n).degree() <= n - 1);
}

TEST_CASE("periodic function against float oracle") {
  for (long long k : {3, 4, 5, 7})
    for (const auto& chi : enumerate_characters(k, CharacterFilter::NonprincipalPrimitive))
      for (int m = 1; m <= 5; ++m)
        for (Rational x : {Rational(0), Rational(1, 3), Rational(7, 4), Rational(-5, 6), Rational(k), Rational(11, 2)}) {
          auto ours = gen_bernoulli_function(chi, m, x).to_complex();
          CHECK(oracle::close(ours, oracle::gen_bbar(chi, m, x), 1e-12L));
          // period k
          CHECK(gen_bernoulli_function(chi, m, x) == gen_bernoulli_function(chi, m, x + Rational(k)));
        }
}

TEST_CASE("periodic function matches the polynomial on [0, 1]") {
  // (a + x)/k stays in [0, 1) for 0 <= a < k, so only the polynomial branch is used.
  auto chi = parse_character("5:2");
  for (int m = 2; m <= 5; ++m)
    for (Rational x : {Rational(0), Rational(1, 7), Rational(2, 3), Rational(1)})
      CHECK(gen_bernoulli_function(chi, m, x) == gen_bernoulli_poly(chi, m).eval(x));
}

TEST_CASE("piecewise representation agrees pointwise") {
  auto chi = parse_character("4:1");
  CycloPiecewise pw = gen_bernoulli_piecewise(chi, 3, Rational(3, 2), Rational(1, 5), Rational(-1), Rational(3));
  const auto& cuts = pw.cuts();
  for (size_t i = 0; i < pw.pieces().size(); ++i) {
    Rational mid = (cuts[i] + cuts[i + 1]) / Rational(2);
    CHECK(pw.pieces()[i].eval(mid) == gen_bernoulli_function(chi, 3, Rational(3, 2) * mid + Rational(1, 5)));
  }
}

TEST_CASE("grid cache returns the function values") {
  auto chi = parse_character("7:2");
  auto grid = gen_bernoulli_grid(chi, 3, 4);
  CHECK(grid->period() == 28);
  for (long long j = -5; j < 40; j += 3) CHECK(grid->at(j) == gen_bernoulli_function(chi, 3, Rational(j, 4)));
  CHECK(gen_bernoulli_grid(chi, 3, 4).get() == grid.get());
}
