#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsum/dirichlet.hpp"

#include <complex>
#include <numeric>
#include <set>

using namespace dsum;

namespace {

// Number of primitive characters mod k: the Dirichlet convolution of phi with mu.
long long primitive_count(long long k) {
  auto mu = [](long long n) {
    int sign = 1;
    for (long long p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
    return n > 1 ? -sign : sign;
  };
  long long total = 0;
  for (long long d = 1; d <= k; ++d)
    if (k % d == 0) total += mu(k / d) * euler_phi(d);
  return total;
}

}  // namespace

TEST_CASE("character counts") {
  for (long long k = 1; k <= 40; ++k) {
    auto all = enumerate_characters(k);
    CHECK(static_cast<long long>(all.size()) == euler_phi(k));
    auto prim = enumerate_characters(k, CharacterFilter::Primitive);
    CHECK(static_cast<long long>(prim.size()) == primitive_count(k));
    for (const auto& chi : prim) CHECK(chi.conductor() == k);
    auto np = enumerate_characters(k, CharacterFilter::NonprincipalPrimitive);
    CHECK(np.size() == prim.size() - (k == 1 ? 1 : 0));
  }
}

TEST_CASE("characters are completely multiplicative, periodic and zero off units") {
  for (long long k : {3, 4, 5, 7, 8, 9, 12, 15, 16, 20}) {
    for (const auto& chi : enumerate_characters(k)) {
      for (long long a = -k; a < 2 * k; ++a) {
        CHECK(chi(a) == chi(a + k));
        if (std::gcd(a, k) != 1) CHECK(chi(a).is_zero());
        for (long long b = 0; b < k; ++b) CHECK(chi(a * b) == chi(a) * chi(b));
      }
      CHECK(chi(1) == Cyclotomic(1));
      CHECK(chi(-1) == Cyclotomic(chi.parity()));
    }
  }
}

TEST_CASE("orthogonality") {
  for (long long k : {5, 8, 12, 21}) {
    auto chars = enumerate_characters(k);
    for (const auto& a : chars)
      for (const auto& b : chars) {
        Cyclotomic s(0);
        for (long long n = 0; n < k; ++n) s += a(n) * b.conjugate()(n);
        CHECK(s == Cyclotomic(a == b ? Rational(euler_phi(k)) : Rational(0)));
      }
  }
}

TEST_CASE("conductor is the least inducing modulus") {
  for (long long k : {8, 12, 15, 16, 24}) {
    for (const auto& chi : enumerate_characters(k)) {
      long long f = chi.conductor();
      CHECK(k % f == 0);
      // chi is f-periodic on units and no proper divisor of f works.
      auto periodic = [&](long long d) {
        for (long long a = 1; a < k; ++a)
          for (long long b = 1; b < k; ++b)
            if (std::gcd(a, k) == 1 && std::gcd(b, k) == 1 && (a - b) % d == 0 && !(chi(a) == chi(b))) return false;
        return true;
      };
      CHECK(periodic(f));
      for (long long d = 1; d < f; ++d)
        if (f % d == 0) CHECK_FALSE(periodic(d));
    }
  }
}

TEST_CASE("labels and parsing") {
  auto chi = parse_character("5:1");
  CHECK(chi.modulus() == 5);
  CHECK(chi.order() == 4);
  CHECK(chi.parity() == -1);
  CHECK(parse_character("8:1.1") == parse_character("8:1,1"));
  CHECK(parse_character("8:1.1").is_primitive());
  CHECK_FALSE(parse_character("8:1.0").is_primitive());
  CHECK(parse_character("3:1").conjugate() == parse_character("3:1"));
  CHECK(parse_character("5:1").conjugate() == parse_character("5:3"));
  CHECK(parse_character("7:0").is_principal());
  CHECK_THROWS_AS(parse_character("5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_character("5:1.1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_character("0:0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_character("x:1"), std::invalid_argument);
  std::set<std::string> labels;
  for (const auto& c : enumerate_characters(24)) labels.insert(c.label());
  CHECK(labels.size() == 8);
  for (const auto& c : enumerate_characters(24)) CHECK(character_from_label(24, c.label()) == c);
}

TEST_CASE("values as complex numbers") {
  // The order-4 characters mod 5 send the generator 2 to +-i.
  auto chi = parse_character("5:1");
  auto v = chi(2).to_complex();
  CHECK(std::abs(std::abs(v) - 1.0L) < 1e-15L);
  CHECK(std::abs(v.real()) < 1e-15L);
  CHECK(chi.value_exponent(5) == -1);
}
