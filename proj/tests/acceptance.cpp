// Acceptance run: one PASS/FAIL line per criterion.
// Exit status is 1 if any criterion fails; --report always exits 0.

#include "dsum/char_bernoulli.hpp"
#include "dsum/dedekind.hpp"
#include "dsum/integrals.hpp"
#include "dsum/laplace.hpp"
#include "dsum/sweep.hpp"
#include "oracle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>

using namespace dsum;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[failed: " << what << "] ";
    }
  }
};

std::string brief(const SweepSummary& s) {
  std::ostringstream o;
  o << s.id << " " << s.total << " pts (" << s.exact_equal << " exact";
  if (s.vacuous) o << ", " << s.vacuous << " vacuous";
  if (s.within_tol) o << ", " << s.within_tol << " within tol";
  if (s.hypothesis_not_met) o << ", " << s.hypothesis_not_met << " hyp-not-met";
  if (s.mismatch) o << ", " << s.mismatch << " MISMATCH";
  o << ")";
  return o.str();
}

SweepResult run_default(const char* id) { return sweep(id, expand_grid(id, GridSpec{}), 1); }

// Every point exact-equal, or vacuous-zero where allow_vacuous.
void all_exact(Outcome& o, const SweepSummary& s, bool allow_vacuous = false) {
  o.detail << brief(s) << "; ";
  long long good = s.exact_equal + (allow_vacuous ? s.vacuous : 0);
  o.require(s.total > 0 && good == s.total, s.id + " not exact-equal everywhere");
}

void criterion_1(Outcome& o) { all_exact(o, run_default("classical-dr").summary); }

void criterion_2(Outcome& o) { all_exact(o, run_default("apostol-dr1").summary); }

void criterion_3(Outcome& o) {
  SweepResult r = run_default("berndt-dkr");
  all_exact(o, r.summary);
  long long c_div = 0;
  for (const auto& rep : r.reports) {
    const long long k = rep.params.character("chi").modulus();
    if (rep.params.integer("c") % k == 0) ++c_div;
  }
  o.require(c_div > 0, "no point with c = 0 mod k");
  // B_{1,chi} for the odd character mod 3 from its defining sum.
  auto chi = parse_character("3:1");
  auto b1 = oracle::gen_bernoulli_number(chi, 1), b1c = oracle::gen_bernoulli_number(chi.conjugate(), 1);
  o.require(oracle::close(b1 * b1c, oracle::cplx(1.0L / 9), 1e-15L), "oracle B_{1,chi} B_{1,conj chi} = 1/9");
  o.require(gen_bernoulli_number(chi, 1) * gen_bernoulli_number(chi.conjugate(), 1) == Cyclotomic(Rational(1, 9)),
            "library B_{1,chi} B_{1,conj chi} = 1/9");
  o.detail << c_div << " pts with k | c; B_{1,chi}B_{1,conj chi} = 1/9";
}

void criterion_4(Outcome& o) { all_exact(o, run_default("cck-rp").summary); }

void criterion_5(Outcome& o) {
  SweepResult r = run_default("rp1");
  const auto& s = r.summary;
  o.detail << brief(s) << "; ";
  o.require(s.mismatch == 0 && s.hypothesis_not_met == 0, "every point exact or vacuous");
  long long printed = 0, swapped = 0, noncoprime = 0;
  for (const auto& rep : r.reports) {
    const int p = rep.params.small_int("p");
    const int sign = reflection_sign(p, rep.params.character("chi1"), rep.params.character("chi2"));
    if (sign == -1) {
      o.require(rep.verdict == Verdict::VacuousZero, "parity-mismatched point not vacuous-zero");
      continue;
    }
    o.require(rep.checks.size() == 2, "two reading sub-checks");
    if (rep.checks.size() != 2) continue;
    bool a = rep.checks[0].verdict == Verdict::ExactEqual, b = rep.checks[1].verdict == Verdict::ExactEqual;
    o.require(a || b, "a reading is exact-equal at every point");
    o.require(rep.notes.find("reading") != std::string::npos, "report names the reading");
    printed += a;
    swapped += b;
    if (rep.params.integer("q") > 1) ++noncoprime;
  }
  o.detail << "printed reading exact on " << printed << ", swapped reading on " << swapped << " (" << noncoprime
           << " with gcd(b,c) > 1)";
}

void criterion_6(Outcome& o) {
  all_exact(o, run_default("rp2").summary, true);
  SweepResult r3 = run_default("rp3");
  all_exact(o, r3.summary, true);
  long long explained = 0, mism = 0;
  for (const auto& rep : r3.reports) {
    if (rep.verdict != Verdict::Mismatch) continue;
    ++mism;
    const long long k1 = rep.params.character("chi1").modulus(), k2 = rep.params.character("chi2").modulus();
    const bool divides = rep.params.integer("c") % k1 == 0 && rep.params.integer("b") % k2 == 0;
    if (divides && !rep.checks.empty() && rep.checks[0].verdict == Verdict::ExactEqual) ++explained;
  }
  if (mism)
    o.detail << "rp3 mismatches: " << explained << "/" << mism
             << " at k1 | c and k2 | b, where rp2 with its double sum kept is exact-equal; ";
}

void criterion_7(Outcome& o) {
  SweepResult r = run_default("lek2");
  all_exact(o, r.summary, true);
  long long scaled = 0;
  for (const auto& rep : r.reports)
    if (rep.params.integer_or("scale", 1) > 1 && rep.verdict == Verdict::ExactEqual) ++scaled;
  o.detail << scaled << " exact q-scaled pts; ";
  all_exact(o, run_default("lek3").summary, true);
}

void criterion_8(Outcome& o) {
  for (const char* id : {"further-c1k", "further-eq20", "further-weighted"}) {
    SweepResult r = run_default(id);
    all_exact(o, r.summary);
    if (std::string(id) == "further-weighted") continue;
    for (const auto& rep : r.reports)
      if (rep.verdict == Verdict::ExactEqual) o.require(std::get<Cyclotomic>(rep.lhs).is_zero(), std::string(id) + " integral is 0");
  }
  SweepResult bc1 = run_default("further-bc1");
  long long derived = 0, printed = 0;
  for (const auto& rep : bc1.reports) {
    if (rep.checks.size() != 2) continue;
    printed += rep.checks[0].verdict == Verdict::ExactEqual;
    derived += rep.checks[1].verdict == Verdict::ExactEqual;
  }
  o.detail << "(companion b=c=1 identity: sign (-1)^l exact on " << derived << "/" << bc1.summary.total
           << ", displayed (-1)^(l+1) on " << printed << ")";
}

void criterion_9(Outcome& o) { all_exact(o, run_default("em-theorem").summary); }

void criterion_10(Outcome& o) {
  GridSpec g;
  SweepResult r = sweep("int-32-oracle", expand_grid("int-32-oracle", g), 1);
  all_exact(o, r.summary);
  long long plain = 0;
  for (const auto& rep : r.reports) {
    if (rep.params.has("chars")) continue;
    ++plain;
    auto deg = rep.params.ints("degrees");
    int sum = 0;
    for (int d : deg) sum += d;
    o.require(deg.size() <= 4 && sum <= 20, "random spec within r <= 4, sum n <= 20");
  }
  o.require(plain >= 200, "at least 200 random specs");

  ProductIntegralSpec a{{3, 4, 16}, {Rational(-1), Rational(3), Rational(5)}, {Rational(1), Rational(-1), Rational(-2)}, Rational(1)};
  o.require(product_integral_direct(a).is_zero() && product_integral_formula(a).is_zero(), "(3,4,16) example is 0");

  ProductIntegralSpec b{{3, 4, 15}, {Rational(-1), Rational(3), Rational(-3)}, {Rational(1), Rational(-1), Rational(2)}, Rational(1)};
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
  o.require(product_integral_direct(b) / b.factorial_weight() == shown, "(3,4,15) example, left = right");
  o.require(product_integral_formula_scaled(b) == shown, "(3,4,15) example, formula = right");
  o.detail << plain << " random specs; worked examples agree";
}

void criterion_11(Outcome& o) {
  for (const char* id : {"int-24", "int-28", "int-23", "int-17", "int-36", "remark-apostol"})
    all_exact(o, run_default(id).summary);
  // Permutation invariance, over a fixed set of specs with n <= 5.
  GridSpec g;
  g.count = 40;
  g.seed = 11;
  SweepResult r = sweep("int-32-oracle", expand_grid("int-32-oracle", g), 1);
  long long perms = 0;
  for (const auto& rep : r.reports)
    for (const auto& c : rep.checks)
      if (c.name.find("permutation") != std::string::npos) {
        ++perms;
        o.require(c.verdict == Verdict::ExactEqual, "permutation invariance");
      }
  o.require(perms > 0, "permutation sub-checks ran");
  o.detail << perms << " permutation checks";
}

void criterion_12(Outcome& o) {
  SweepResult r = run_default("laplace-16");
  const auto& s = r.summary;
  o.detail << brief(s) << "; ";
  o.require(s.total == 108 && s.within_tol + s.exact_equal == s.total, "laplace-16 grid within tolerance");
  const long double expected = 0.5L - 1 / (std::exp(1.0L) - 1);
  o.require(std::fabs(laplace16_rhs(1, Rational(1), Rational(0), 1) - expected) < 1e-12L, "spot value closed form");
  o.require(std::fabs(laplace16_lhs(1, Rational(1), Rational(0), 1) - expected) < 1e-12L, "spot value numeric");
  for (const char* id : {"laplace-product", "laplace-char"}) {
    SweepResult v = run_default(id);
    o.detail << brief(v.summary) << "; ";
    o.require(v.summary.total >= 10 && v.summary.within_tol + v.summary.exact_equal == v.summary.total,
              std::string(id) + " within tolerance");
  }
}

}  // namespace

int main(int argc, char** argv) {
  const bool report = argc > 1 && std::strcmp(argv[1], "--report") == 0;
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"classical reciprocity", criterion_1},
      {"Apostol reciprocity", criterion_2},
      {"Berndt character reciprocity", criterion_3},
      {"prime-modulus character reciprocity", criterion_4},
      {"two-character reciprocity (same modulus)", criterion_5},
      {"two-character reciprocity (two moduli) and corollary", criterion_6},
      {"closed forms and q-scaling", criterion_7},
      {"vanishing integrals and weighted identity", criterion_8},
      {"Euler-MacLaurin formula", criterion_9},
      {"product integral formula vs direct", criterion_10},
      {"two-factor and symmetric integral identities", criterion_11},
      {"Laplace transforms", criterion_12},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::string detail = o.detail.str();
    while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
    std::printf("%s %2zu %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return report || failed == 0 ? 0 : 1;
}
