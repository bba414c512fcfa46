#include "dsum/sweep.hpp"

#include "dsum/dedekind.hpp"
#include "dsum/dirichlet.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

namespace dsum {

namespace {

using Points = std::vector<Params>;

template <class T>
std::vector<T> or_default(const std::vector<T>& given, std::vector<T> fallback) {
  return given.empty() ? fallback : given;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::vector<long long> lrange(long long lo, long long hi) {
  std::vector<long long> v;
  for (long long i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

struct Gen {
  const GridSpec& g;
  std::mt19937_64 rng;

  explicit Gen(const GridSpec& grid) : g(grid), rng(grid.seed) {}

  long long bc_max(long long fallback) const { return g.bc_max.value_or(fallback); }
  bool coprime(bool fallback) const { return g.coprime.value_or(fallback); }

  long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); }

  /// num / den with |num|, den <= 9.
  Rational small_rational(bool nonzero = false) {
    for (;;) {
      Rational r(uniform(-9, 9), uniform(1, 9));
      if (!nonzero || !r.is_zero()) return r;
    }
  }

  /// Calls f(b, c) over the b, c grid.
  template <class F>
  void bc(long long max, bool only_coprime, F f) const {
    for (long long b = 1; b <= max; ++b)
      for (long long c = 1; c <= max; ++c)
        if (!only_coprime || gcd_ll(b, c) == 1) f(b, c);
  }

  std::vector<DirichletCharacter> chars(long long k, CharacterFilter filter = CharacterFilter::NonprincipalPrimitive) {
    return enumerate_characters(k, filter);
  }

  /// Ordered pairs (chi1, chi2) of the same modulus.
  std::vector<std::pair<DirichletCharacter, DirichletCharacter>> same_modulus_pairs(const std::vector<long long>& ks) {
    std::vector<std::pair<DirichletCharacter, DirichletCharacter>> out;
    for (long long k : ks) {
      auto cs = chars(k);
      for (const auto& a : cs)
        for (const auto& b : cs) out.emplace_back(a, b);
    }
    return out;
  }

  std::vector<std::pair<DirichletCharacter, DirichletCharacter>> cross_pairs(
      const std::vector<std::pair<long long, long long>>& kp) {
    std::vector<std::pair<DirichletCharacter, DirichletCharacter>> out;
    for (auto [k1, k2] : kp)
      for (const auto& a : chars(k1))
        for (const auto& b : chars(k2)) out.emplace_back(a, b);
    return out;
  }
};

Params pbc(int p, long long b, long long c) {
  Params q;
  q.set("p", p);
  q.set("b", b);
  q.set("c", c);
  return q;
}

Params& with_pair(Params& q, const DirichletCharacter& a, const DirichletCharacter& b) {
  q.set_character("chi1", a);
  q.set_character("chi2", b);
  return q;
}

const std::vector<std::pair<long long, long long>> kDefaultKPairs = {{3, 4}, {3, 5}, {4, 5}};

Points pair_grid(Gen& g, std::vector<std::pair<DirichletCharacter, DirichletCharacter>> pairs, std::vector<int> ps,
                 long long bmax, bool only_coprime) {
  Points out;
  for (const auto& [a, b] : pairs)
    for (int p : ps)
      g.bc(bmax, only_coprime, [&](long long bb, long long cc) {
        Params q = pbc(p, bb, cc);
        out.push_back(with_pair(q, a, b));
      });
  return out;
}

/// Pairs of the same modulus with sign (-1)^(p+1) chi1(-1) chi2(-1) = want,
/// crossed with l in 0..p-1-l_gap.
template <class F>
void further_grid(Gen& g, const std::vector<long long>& ks, const std::vector<int>& ps, int want, int l_gap, F emit) {
  for (const auto& [a, b] : g.same_modulus_pairs(ks))
    for (int p : ps) {
      if (reflection_sign(p, a, b) != want) continue;
      std::vector<int> ls = g.g.l.empty() ? range(0, p - 1 - l_gap) : g.g.l;
      for (int l : ls) {
        if (l < 0 || l > p - 1 - l_gap) continue;
        Params q;
        q.set("p", p);
        q.set("l", l);
        with_pair(q, a, b);
        emit(q);
      }
    }
}

Points expand(std::string_view id, Gen& g) {
  const GridSpec& s = g.g;
  Points out;
  auto push = [&](Params q) { out.push_back(std::move(q)); };

  if (id == "classical-dr") {
    g.bc(g.bc_max(30), g.coprime(true), [&](long long b, long long c) {
      Params q;
      q.set("b", b);
      q.set("c", c);
      push(q);
    });
  } else if (id == "apostol-dr1") {
    for (int p : or_default(s.p, {1, 3, 5, 7}))
      g.bc(g.bc_max(12), g.coprime(true), [&](long long b, long long c) { push(pbc(p, b, c)); });
  } else if (id == "berndt-dkr") {
    for (long long k : or_default(s.k, {3, 4, 5}))
      for (const auto& chi : g.chars(k))
        g.bc(g.bc_max(10), g.coprime(true), [&](long long b, long long c) {
          if (c % k != 0 && b % k != 0) return;
          Params q;
          q.set("b", b);
          q.set("c", c);
          q.set_character("chi", chi);
          push(q);
        });
  } else if (id == "cck-rp") {
    for (long long k : or_default(s.k, {3, 5, 7}))
      for (const auto& chi : g.chars(k))
        for (int p : or_default(s.p, {1, 3, 5}))
          g.bc(g.bc_max(8), g.coprime(true), [&](long long b, long long c) {
            Params q = pbc(p, b, c);
            q.set_character("chi", chi);
            push(q);
          });
  } else if (id == "rp1") {
    out = pair_grid(g, g.same_modulus_pairs(or_default(s.k, {3, 4, 5, 7})), or_default(s.p, range(2, 6)),
                    g.bc_max(8), g.coprime(false));
  } else if (id == "rp2" || id == "rp3") {
    auto pairs = s.k.empty() ? g.cross_pairs(or_default(s.k_pairs, kDefaultKPairs)) : g.same_modulus_pairs(s.k);
    out = pair_grid(g, pairs, or_default(s.p, range(2, 5)), g.bc_max(6), g.coprime(false));
  } else if (id == "lek2") {
    Points base = pair_grid(g, g.same_modulus_pairs(or_default(s.k, {3, 4, 5, 7})), or_default(s.p, range(2, 6)),
                            g.bc_max(8), g.coprime(true));
    const long long qmax = s.scale_max.value_or(4);
    for (auto& q : base)
      for (long long sc = 1; sc <= qmax; ++sc) {
        Params r = q;
        r.set("scale", sc);
        push(r);
      }
  } else if (id == "lek3") {
    auto pairs = s.k.empty() ? g.cross_pairs(or_default(s.k_pairs, kDefaultKPairs)) : g.same_modulus_pairs(s.k);
    out = pair_grid(g, pairs, or_default(s.p, range(2, 5)), g.bc_max(6), g.coprime(true));
  } else if (id == "raabe") {
    const int per = s.count.value_or(3);
    for (int p : or_default(s.p, range(0, 6)))
      for (long long c = 1; c <= g.bc_max(10); ++c)
        for (int i = 0; i < per; ++i) {
          Params q;
          q.set("p", p);
          q.set("c", c);
          q.set_rational("x", Rational(g.uniform(-40, 40), g.uniform(1, 12)));
          push(q);
        }
  } else if (id == "em-theorem") {
    std::vector<RationalPolynomial> fs;
    for (int d = 0; d <= 5; ++d) {
      std::vector<Rational> c(d + 1, Rational(0));
      c[d] = Rational(1);
      fs.emplace_back(c);
    }
    fs.push_back(RationalPolynomial({Rational(1, 2), Rational(-3), Rational(0), Rational(2, 3), Rational(0), Rational(1)}));
    for (long long k : or_default(s.k, lrange(3, 7)))
      for (const auto& chi : enumerate_characters(k, CharacterFilter::All)) {
        if (chi.is_principal()) continue;
        for (const auto& f : fs)
          for (int l : or_default(s.l, range(0, 4)))
            for (auto [lo, hi] : std::vector<std::pair<long long, long long>>{{0, k}, {0, 2 * k}, {1, 3 * k}}) {
              Params q;
              q.set_character("chi", chi);
              std::vector<Rational> coeffs(f.coeffs().begin(), f.coeffs().end());
              q.set_rationals("f", coeffs);
              q.set("alpha", lo);
              q.set("beta", hi);
              q.set("l", l);
              push(q);
            }
      }
  } else if (id == "further-c1k" || id == "further-bc1") {
    further_grid(g, or_default(s.k, {3, 4, 5}), or_default(s.p, range(1, 5)), 1, 0, push);
  } else if (id == "further-eq20") {
    further_grid(g, or_default(s.k, {3, 4, 5}), or_default(s.p, range(1, 5)), -1, 0, [&](const Params& q) {
      g.bc(g.bc_max(4), g.coprime(false), [&](long long b, long long c) {
        Params r = q;
        r.set("b", b);
        r.set("c", c);
        push(r);
      });
    });
  } else if (id == "further-weighted") {
    further_grid(g, or_default(s.k, {3, 4, 5}), or_default(s.p, range(2, 5)), -1, 1, [&](const Params& q) {
      g.bc(g.bc_max(4), g.coprime(true), [&](long long b, long long c) {
        Params r = q;
        r.set("b", b);
        r.set("c", c);
        push(r);
      });
    });
  } else if (id == "int-32-oracle") {
    const int count = s.count.value_or(200);
    for (int i = 0; i < count; ++i) {
      const int r = static_cast<int>(g.uniform(1, 4));
      std::vector<int> degrees(r);
      for (;;) {
        int total = 0;
        for (auto& d : degrees) total += (d = static_cast<int>(g.uniform(0, 8)));
        if (total <= 20) break;
      }
      std::vector<Rational> slopes, offsets;
      for (int j = 0; j < r; ++j) {
        slopes.push_back(g.small_rational(true));
        offsets.push_back(g.small_rational());
      }
      Params q;
      q.set("degrees", degrees);
      q.set_rationals("slopes", slopes);
      q.set_rationals("offsets", offsets);
      q.set_rational("x", g.small_rational());
      push(q);
    }
    // Character variants, non-principal primitive characters mod 3, 4, 5.
    const int char_count = s.count.value_or(200) / 10;
    std::vector<DirichletCharacter> pool;
    for (long long k : {3, 4, 5})
      for (const auto& chi : g.chars(k)) pool.push_back(chi);
    for (int i = 0; i < char_count; ++i) {
      const int r = static_cast<int>(g.uniform(1, 3));
      std::vector<int> degrees;
      std::vector<Rational> slopes, offsets;
      std::vector<std::string> cs;
      for (int j = 0; j < r; ++j) {
        degrees.push_back(static_cast<int>(g.uniform(1, 5)));
        slopes.push_back(g.small_rational(true));
        offsets.push_back(g.small_rational());
        cs.push_back(character_spec(pool[g.uniform(0, static_cast<long long>(pool.size()) - 1)]));
      }
      Params q;
      q.set("degrees", degrees);
      q.set_rationals("slopes", slopes);
      q.set_rationals("offsets", offsets);
      q.set_rational("x", g.small_rational());
      q.set("chars", cs);
      push(q);
    }
  } else if (id == "int-24" || id == "int-28" || id == "int-36" || id == "remark-apostol") {
    const bool chars = id == "int-36";
    std::vector<std::pair<DirichletCharacter, DirichletCharacter>> pairs;
    if (chars) pairs = g.same_modulus_pairs(or_default(s.k, {3, 4}));
    for (int n : or_default(s.n, range(chars ? 1 : 0, 5)))
      for (int m : or_default(s.m, range(chars ? 1 : 0, 5))) {
        if (id == "remark-apostol") {
          if ((n + m) % 2 == 0) continue;
          g.bc(g.bc_max(6), g.coprime(false), [&](long long b1, long long b2) {
            Params q;
            q.set("n", n);
            q.set("m", m);
            q.set("b1", b1);
            q.set("b2", b2);
            q.set_rational("x", g.small_rational());
            push(q);
          });
          continue;
        }
        const size_t reps = chars ? pairs.size() : 3;
        for (size_t i = 0; i < reps; ++i) {
          Params q;
          q.set("n", n);
          q.set("m", m);
          if (id != "int-28") {
            q.set_rational("b1", g.small_rational(true));
            q.set_rational("b2", g.small_rational(true));
          }
          q.set_rational("y1", g.small_rational());
          q.set_rational("y2", g.small_rational());
          q.set_rational("x", g.small_rational());
          if (chars) with_pair(q, pairs[i].first, pairs[i].second);
          push(q);
        }
      }
  } else if (id == "int-17") {
    const int count = s.count.value_or(60);
    for (int i = 0; i < count; ++i) {
      const int r = static_cast<int>(g.uniform(1, 3));
      std::vector<int> degrees;
      std::vector<Rational> offsets;
      for (int j = 0; j < r; ++j) {
        degrees.push_back(static_cast<int>(g.uniform(0, 5)));
        Rational y;
        do y = g.small_rational();
        while (y == Rational(1, 2));
        offsets.push_back(y);
      }
      Params q;
      q.set("degrees", degrees);
      q.set_rationals("offsets", offsets);
      q.set_rational("q", g.small_rational(true));
      push(q);
    }
  } else if (id == "int-23") {
    for (int p : or_default(s.p, range(1, 10))) {
      Params q;
      q.set("p", p);
      push(q);
    }
  } else if (id == "laplace-16") {
    for (int n : or_default(s.n, range(1, 4)))
      for (long long t : {1, 2, 3})
        for (Rational y : {Rational(0), Rational(1, 3), Rational(5, 2)})
          for (double sv : {0.5, 1.0, 2.0}) {
            Params q;
            q.set("n", n);
            q.set_rational("t", Rational(t));
            q.set_rational("y", y);
            q.set("s", sv);
            push(q);
          }
  } else if (id == "laplace-product") {
    const std::vector<std::tuple<int, int, double>> pts = {{0, 1, 1.0}, {1, 1, 0.5}, {1, 2, 2.0}, {2, 1, 1.5},
                                                           {2, 2, 1.0}, {3, 1, 3.0}, {3, 3, 0.75}, {4, 2, 2.5},
                                                           {0, 4, 0.5}, {5, 1, 4.0}};
    for (auto [m, n, sv] : pts) {
      Params q;
      q.set("m", m);
      q.set("n", n);
      q.set("s", sv);
      push(q);
    }
  } else if (id == "laplace-char") {
    const std::vector<std::tuple<std::string, int, long long, double>> pts = {
        {"3:1", 1, 1, 1.0}, {"3:1", 2, 2, 0.5}, {"4:1", 1, 1, 2.0}, {"4:1", 3, 3, 1.5}, {"5:1", 1, 1, 0.75},
        {"5:2", 2, 1, 1.0}, {"5:3", 3, 2, 2.0}, {"7:1", 1, 3, 0.5}, {"7:3", 2, 1, 3.0}, {"8:1.1", 2, 2, 1.0}};
    for (const auto& [chi, n, t, sv] : pts) {
      Params q;
      q.set("chi", chi);
      q.set("n", n);
      q.set_rational("t", Rational(t));
      q.set("s", sv);
      push(q);
    }
  } else {
    throw std::invalid_argument("unknown identity id: " + std::string(id));
  }
  return out;
}

}  // namespace

std::vector<Params> expand_grid(std::string_view id, const GridSpec& grid) {
  Gen g(grid);
  return expand(id, g);
}

Json SweepSummary::to_json() const {
  Json j = Json::object();
  j["id"] = id;
  j["total"] = total;
  j["exact_equal"] = exact_equal;
  j["within_tol"] = within_tol;
  j["vacuous"] = vacuous;
  j["hypothesis_not_met"] = hypothesis_not_met;
  j["mismatch"] = mismatch;
  return j;
}

SweepResult sweep(std::string_view id, const std::vector<Params>& points, int jobs, const VerifyOptions& opts) {
  if (!is_identity_id(id)) throw std::invalid_argument("unknown identity id: " + std::string(id));
  SweepResult res;
  res.reports.resize(points.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next.fetch_add(1)) < points.size();) {
      try {
        res.reports[i] = verify_identity(id, points[i], opts);
      } catch (const std::exception& e) {
        VerificationReport r;
        r.id = std::string(id);
        r.params = points[i];
        r.verdict = Verdict::Mismatch;
        r.notes = std::string("error: ") + e.what();
        res.reports[i] = std::move(r);
      }
    }
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(points.size())));
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  SweepSummary& s = res.summary;
  s.id = std::string(id);
  for (const auto& r : res.reports) {
    ++s.total;
    switch (r.verdict) {
      case Verdict::ExactEqual: ++s.exact_equal; break;
      case Verdict::EqualWithinTol: ++s.within_tol; break;
      case Verdict::VacuousZero: ++s.vacuous; break;
      case Verdict::HypothesisNotMet: ++s.hypothesis_not_met; break;
      case Verdict::Mismatch: ++s.mismatch; break;
    }
  }
  return res;
}

std::vector<long long> parse_range_list(std::string_view text) {
  auto num = [&](std::string_view t) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
      throw std::invalid_argument("bad range list '" + std::string(text) + "'");
    return v;
  };
  std::set<long long> vals;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    size_t dots = item.find("..");
    if (dots == std::string_view::npos) {
      vals.insert(num(item));
    } else {
      long long lo = num(item.substr(0, dots)), hi = num(item.substr(dots + 2));
      if (hi < lo || hi - lo > 100000) throw std::invalid_argument("bad range '" + std::string(item) + "'");
      for (long long v = lo; v <= hi; ++v) vals.insert(v);
    }
    start = end + 1;
  }
  return {vals.begin(), vals.end()};
}

std::vector<std::pair<long long, long long>> parse_pair_list(std::string_view text) {
  std::vector<std::pair<long long, long long>> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("bad modulus pair '" + std::string(item) + "'");
    auto a = parse_range_list(item.substr(0, colon)), b = parse_range_list(item.substr(colon + 1));
    if (a.size() != 1 || b.size() != 1) throw std::invalid_argument("bad modulus pair '" + std::string(item) + "'");
    out.emplace_back(a[0], b[0]);
    start = end + 1;
  }
  return out;
}

}  // namespace dsum
