#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsum/closed_forms.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/laplace.hpp"
#include "dsum/sweep.hpp"
#include "dsum/verify.hpp"
#include "oracle.hpp"

#include <cmath>

using namespace dsum;

namespace {

Params P(const char* json) { return Params::parse(json); }

Verdict run(const char* id, const char* json) { return verify_identity(id, P(json)).verdict; }

}  // namespace

TEST_CASE("registry") {
  CHECK(identity_ids().size() == 25);
  CHECK(is_identity_id("rp1"));
  CHECK_FALSE(is_identity_id("rp4"));
  CHECK_THROWS_AS(verify_identity("rp4", Params()), std::invalid_argument);
  for (const auto& id : identity_ids()) CHECK_NOTHROW(expand_grid(id, GridSpec{}));
}

TEST_CASE("classical reciprocity example") {
  auto r = verify_identity("classical-dr", P(R"({"b": 2, "c": 3})"));
  CHECK(r.verdict == Verdict::ExactEqual);
  CHECK(std::get<Rational>(r.lhs) == Rational(-1, 18));
  CHECK(r.to_json()["params"]["q"] == 1);
  CHECK(run("classical-dr", R"({"b": 4, "c": 6})") == Verdict::HypothesisNotMet);
  // Forcing a non-coprime pair evaluates both sides, which then differ.
  auto forced = verify_identity("classical-dr", P(R"({"b": 4, "c": 6, "force": true})"));
  CHECK(forced.verdict == Verdict::Mismatch);
  CHECK(forced.notes.find("evaluated anyway") != std::string::npos);
}

TEST_CASE("malformed params") {
  CHECK_THROWS_AS(verify_identity("classical-dr", P(R"({"b": 2})")), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity("classical-dr", P(R"({"b": "2/x", "c": 3})")), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity("berndt-dkr", P(R"({"b": 1, "c": 3, "chi": "3:7"})")), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity("laplace-16", P(R"({"n": 1, "t": 1, "y": 0, "s": 0})")), std::invalid_argument);
  CHECK_THROWS_AS(verify_identity("laplace-16", P(R"({"n": 1, "t": 1, "y": 0, "s": -1})")), std::invalid_argument);
}

TEST_CASE("Apostol and Berndt examples") {
  CHECK(run("apostol-dr1", R"({"p": 3, "b": 2, "c": 3})") == Verdict::ExactEqual);
  CHECK(run("apostol-dr1", R"({"p": 2, "b": 2, "c": 3})") == Verdict::HypothesisNotMet);
  auto r = verify_identity("berndt-dkr", P(R"({"b": 1, "c": 3, "chi": "3:1"})"));
  CHECK(r.verdict == Verdict::ExactEqual);
  CHECK(std::get<Cyclotomic>(r.rhs) == Cyclotomic(Rational(1, 9)));
  CHECK(dkr_rhs(parse_character("3:1")) == Cyclotomic(Rational(1, 9)));
  CHECK(run("berndt-dkr", R"({"b": 2, "c": 5, "chi": "3:1"})") == Verdict::HypothesisNotMet);
}

TEST_CASE("cck-rp hypothesis on k") {
  // k = 4 is not prime and gcd(4, 3 * 5) = 1.
  CHECK(run("cck-rp", R"({"p": 1, "b": 3, "c": 5, "chi": "4:1"})") == Verdict::HypothesisNotMet);
  CHECK(run("cck-rp", R"({"p": 1, "b": 2, "c": 5, "chi": "4:1"})") == Verdict::ExactEqual);
  CHECK(run("cck-rp", R"({"p": 3, "b": 3, "c": 5, "chi": "5:1"})") == Verdict::ExactEqual);
}

TEST_CASE("rp1 readings") {
  auto r = verify_identity("rp1", P(R"({"p": 3, "b": 2, "c": 3, "chi1": "5:1", "chi2": "5:1"})"));
  CHECK(r.verdict == Verdict::ExactEqual);
  REQUIRE(r.checks.size() == 2);
  CHECK(r.checks[0].verdict == Verdict::Mismatch);
  CHECK(r.checks[1].verdict == Verdict::ExactEqual);
  CHECK(r.notes.find("swapped") != std::string::npos);
  // Non-coprime pair: the q-scaled double sum still closes the identity.
  CHECK(run("rp1", R"({"p": 3, "b": 4, "c": 6, "chi1": "5:1", "chi2": "5:3"})") == Verdict::ExactEqual);
  // p even with parity product -1: both sums vanish.
  auto v = verify_identity("rp1", P(R"({"p": 2, "b": 2, "c": 3, "chi1": "5:1", "chi2": "5:1"})"));
  CHECK(v.verdict == Verdict::VacuousZero);
  CHECK(run("rp1", R"({"p": 1, "b": 2, "c": 3, "chi1": "5:1", "chi2": "5:1"})") == Verdict::HypothesisNotMet);
  CHECK(run("rp1", R"({"p": 3, "b": 2, "c": 3, "chi1": "8:1.0", "chi2": "8:1.0"})") == Verdict::HypothesisNotMet);
  CHECK_THROWS_AS(verify_identity("rp1", P(R"({"p": 3, "b": 2, "c": 3, "chi1": "5:1", "chi2": "3:1"})")),
                  std::invalid_argument);
}

TEST_CASE("rp2 asserts the inclusive and exclusive double sums agree") {
  auto r = verify_identity("rp2", P(R"({"p": 3, "b": 2, "c": 5, "chi1": "3:1", "chi2": "4:1"})"));
  CHECK(r.verdict == Verdict::ExactEqual);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].verdict == Verdict::ExactEqual);
}

TEST_CASE("rp3 fails exactly where the dropped double sum survives") {
  // k1 = 3 divides c and k2 = 4 divides b.
  auto bad = verify_identity("rp3", P(R"({"p": 3, "b": 4, "c": 3, "chi1": "3:1", "chi2": "4:1"})"));
  CHECK(bad.verdict == Verdict::Mismatch);
  REQUIRE(bad.checks.size() == 1);
  CHECK(bad.checks[0].verdict == Verdict::ExactEqual);
  CHECK(run("rp3", R"({"p": 3, "b": 2, "c": 3, "chi1": "3:1", "chi2": "4:1"})") == Verdict::ExactEqual);
  CHECK(run("rp3", R"({"p": 3, "b": 2, "c": 3, "chi1": "5:1", "chi2": "5:2"})") == Verdict::HypothesisNotMet);
}

TEST_CASE("lek2 q-scaling and lek3") {
  auto r = verify_identity("lek2", P(R"({"p": 3, "b": 2, "c": 3, "chi1": "5:1", "chi2": "5:1", "scale": 3})"));
  CHECK(r.verdict == Verdict::ExactEqual);
  CHECK(r.checks.size() == 2);
  for (const auto& c : r.checks) CHECK(c.verdict == Verdict::ExactEqual);
  CHECK(run("lek2", R"({"p": 3, "b": 2, "c": 4, "chi1": "5:1", "chi2": "5:1"})") == Verdict::HypothesisNotMet);
  CHECK(run("lek3", R"({"p": 3, "b": 2, "c": 3, "chi1": "3:1", "chi2": "5:1"})") != Verdict::Mismatch);
  // Independence check of the closed form against the library's double-sum helper.
  auto a = parse_character("7:1"), b = parse_character("7:5");
  for (int p = 2; p <= 4; ++p)
    if (reflection_sign(p, a, b) == 1)
      CHECK(lek2_closed(p, 3, 5, a, b) == char_weighted_power_double_sum(p, 3, 5, a, b));
}

TEST_CASE("raabe") {
  CHECK(run("raabe", R"({"p": 4, "c": 7, "x": "-13/5"})") == Verdict::ExactEqual);
  CHECK(run("raabe", R"({"p": 0, "c": 3, "x": "1/3"})") == Verdict::ExactEqual);
}

TEST_CASE("Euler-MacLaurin examples") {
  for (const auto& chi : enumerate_characters(5)) {
    if (chi.is_principal()) continue;
    auto r = verify_euler_maclaurin(chi, RationalPolynomial::constant(Rational(1)), Rational(0), Rational(5), 0);
    CHECK(r.verdict == Verdict::ExactEqual);
    CHECK(std::get<Cyclotomic>(r.lhs).is_zero());
    CHECK(std::get<Cyclotomic>(r.rhs).is_zero());
  }
  auto x = RationalPolynomial::identity();
  CHECK(verify_euler_maclaurin(parse_character("3:1"), x, Rational(0), Rational(6), 1).verdict == Verdict::ExactEqual);
  CHECK(verify_euler_maclaurin(parse_character("4:1"), x * x, Rational(0), Rational(8), 2).verdict == Verdict::ExactEqual);
  // Non-integer endpoints, imprimitive character.
  CHECK(verify_euler_maclaurin(parse_character("8:1.0"), x * x * x, Rational(-1, 2), Rational(17, 3), 3).verdict ==
        Verdict::ExactEqual);
  CHECK(verify_euler_maclaurin(parse_character("5:0"), x, Rational(0), Rational(5), 0).verdict ==
        Verdict::HypothesisNotMet);
  CHECK(verify_euler_maclaurin(parse_character("5:1"), x, Rational(5), Rational(0), 0).verdict ==
        Verdict::HypothesisNotMet);
}

TEST_CASE("further consequences") {
  CHECK(run("further-c1k", R"({"p": 3, "l": 1, "chi1": "5:1", "chi2": "5:1"})") == Verdict::ExactEqual);
  CHECK(run("further-c1k", R"({"p": 2, "l": 1, "chi1": "5:1", "chi2": "5:1"})") == Verdict::HypothesisNotMet);
  auto bc1 = verify_identity("further-bc1", P(R"({"p": 3, "l": 0, "chi1": "5:1", "chi2": "5:1"})"));
  REQUIRE(bc1.checks.size() == 2);
  CHECK(bc1.checks[0].verdict == Verdict::Mismatch);     // (-1)^(l+1)
  CHECK(bc1.checks[1].verdict == Verdict::ExactEqual);   // (-1)^l
  CHECK(run("further-eq20", R"({"p": 2, "l": 1, "b": 3, "c": 2, "chi1": "5:1", "chi2": "5:1"})") == Verdict::ExactEqual);
  CHECK(run("further-weighted", R"({"p": 4, "l": 1, "b": 3, "c": 2, "chi1": "5:1", "chi2": "5:1"})") ==
        Verdict::ExactEqual);
}

TEST_CASE("integral checkers") {
  CHECK(run("int-32-oracle", R"({"degrees": [3, 4, 16], "slopes": ["-1", "3", "5"], "offsets": ["1", "-1", "-2"], "x": "1"})") ==
        Verdict::ExactEqual);
  auto r = verify_identity("int-32-oracle", P(R"({"degrees": [2, 1, 3], "slopes": [1, 1, 1], "offsets": [0, 0, 0], "x": "3/2"})"));
  CHECK(r.verdict == Verdict::ExactEqual);
  CHECK(r.checks.size() == 2);  // permutations and the three-factor closed form
  CHECK(run("int-32-oracle", R"({"degrees": [2, 3], "slopes": ["1/2", "-2"], "offsets": ["1/3", "1"], "x": "5/2", "chars": ["3:1", "5:1"]})") ==
        Verdict::ExactEqual);
  CHECK(run("int-24", R"({"n": 3, "m": 2, "b1": "2/3", "b2": "-5", "y1": "1/4", "y2": "2", "x": "7"})") == Verdict::ExactEqual);
  CHECK(run("int-28", R"({"n": 3, "m": 4, "x": "1/5", "y1": "2/3", "y2": "-1"})") == Verdict::ExactEqual);
  CHECK(run("int-17", R"({"degrees": [3, 4, 16], "offsets": ["1", "-1", "-2"], "q": 1})") == Verdict::ExactEqual);
  CHECK(run("int-17", R"({"degrees": [3, 4, 15], "offsets": ["1", "-1", "2"], "q": 1})") == Verdict::ExactEqual);
  CHECK(run("int-17", R"({"degrees": [3], "offsets": ["1/2"], "q": 1})") == Verdict::HypothesisNotMet);
  CHECK(run("int-23", R"({"p": 6})") == Verdict::ExactEqual);
  CHECK(run("int-36", R"({"n": 2, "m": 3, "b1": "2", "b2": "1/3", "y1": "0", "y2": "1/2", "x": "4/3", "chi1": "3:1", "chi2": "4:1"})") ==
        Verdict::ExactEqual);
  CHECK(run("remark-apostol", R"({"n": 2, "m": 3, "b1": 4, "b2": 6, "x": "2/7"})") == Verdict::ExactEqual);
  CHECK(run("remark-apostol", R"({"n": 2, "m": 2, "b1": 4, "b2": 6})") == Verdict::HypothesisNotMet);
}

TEST_CASE("Laplace transform spot value and oracle") {
  const long double expected = 0.5L - 1 / (std::exp(1.0L) - 1);
  CHECK(std::fabs(laplace16_rhs(1, Rational(1), Rational(0), 1) - expected) < 1e-15L);
  CHECK(std::fabs(laplace16_lhs(1, Rational(1), Rational(0), 1) - expected) < 1e-14L);
  // Quadrature of e^(-u) B̄_1(u) over [0, 60], one unit piece at a time.
  long double quad = 0;
  for (int j = 0; j < 60; ++j)
    quad += oracle::integrate([](long double u) { return std::exp(-u) * oracle::bbar(1, u); }, j, j + 1, 1);
  CHECK(std::fabs(quad - expected) < 1e-12L);
  auto r = laplace_check(1, Rational(1), Rational(0), 1.0);
  CHECK(r.verdict == Verdict::EqualWithinTol);
  CHECK(r.checks.size() == 1);  // series form, s/t < 2 pi
  CHECK(r.checks[0].verdict == Verdict::EqualWithinTol);
  CHECK(laplace_check(2, Rational(1), Rational(3), 2.0).verdict == Verdict::EqualWithinTol);
  CHECK(laplace_check(3, Rational(1), Rational(0), 40.0).checks.empty());
  // Large s: both sides tiny, compared with the absolute floor.
  CHECK(laplace_check(3, Rational(1), Rational(0), 40.0).verdict == Verdict::EqualWithinTol);
  CHECK_THROWS_AS(laplace_check(1, Rational(1), Rational(0), 0.0), std::invalid_argument);
}

TEST_CASE("Laplace product and character variants") {
  CHECK(run("laplace-product", R"({"m": 2, "n": 3, "s": 1.25})") == Verdict::EqualWithinTol);
  CHECK(run("laplace-char", R"({"chi": "5:1", "n": 2, "t": "3/2", "s": 0.8})") == Verdict::EqualWithinTol);
  CHECK(run("laplace-char", R"({"chi": "5:0", "n": 2, "t": 1, "s": 0.8})") == Verdict::HypothesisNotMet);
}

TEST_CASE("report JSON round trip") {
  auto r = verify_identity("rp1", P(R"({"p": 3, "b": 2, "c": 3, "chi1": "5:1", "chi2": "5:3"})"));
  Json j = r.to_json();
  Scalar lhs = scalar_from_json(j["lhs"]);
  Scalar rhs = scalar_from_json(j["rhs"]);
  CHECK(compare_exact(lhs, rhs) == Verdict::ExactEqual);
  CHECK(scalar_to_json(lhs) == j["lhs"]);
  CHECK(parse_verdict(j["verdict"].get<std::string>()) == r.verdict);
}
