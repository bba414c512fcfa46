#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsum/sweep.hpp"

using namespace dsum;

namespace {

SweepSummary run(const char* id, GridSpec g = {}) { return sweep(id, expand_grid(id, g), 1).summary; }

}  // namespace

TEST_CASE("grid expansion is deterministic") {
  GridSpec g;
  g.seed = 42;
  auto a = expand_grid("int-32-oracle", g), b = expand_grid("int-32-oracle", g);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].json() == b[i].json());
  g.seed = 43;
  auto c = expand_grid("int-32-oracle", g);
  CHECK(c[0].json() != a[0].json());
}

TEST_CASE("sweep results do not depend on the worker count") {
  GridSpec g;
  g.p = {2, 3};
  g.k = {5};
  g.bc_max = 4;
  auto pts = expand_grid("rp1", g);
  auto one = sweep("rp1", pts, 1), many = sweep("rp1", pts, 4);
  REQUIRE(one.reports.size() == many.reports.size());
  for (size_t i = 0; i < one.reports.size(); ++i) CHECK(one.reports[i].to_json() == many.reports[i].to_json());
}

TEST_CASE("range parsing") {
  CHECK(parse_range_list("2..4,7") == std::vector<long long>{2, 3, 4, 7});
  CHECK(parse_range_list("3,1,3") == std::vector<long long>{1, 3});
  CHECK_THROWS_AS(parse_range_list("4..2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range_list("a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_range_list(""), std::invalid_argument);
  CHECK(parse_pair_list("3:4,4:5") == std::vector<std::pair<long long, long long>>{{3, 4}, {4, 5}});
  CHECK_THROWS_AS(parse_pair_list("3-4"), std::invalid_argument);
}

TEST_CASE("Raabe multiplication theorem on random points") {
  for (std::uint64_t seed : {1, 2, 3}) {
    GridSpec g;
    g.seed = seed;
    auto s = run("raabe", g);
    CHECK(s.mismatch == 0);
    CHECK(s.exact_equal == s.total);
  }
}

TEST_CASE("random product-integral specs with other seeds") {
  for (std::uint64_t seed : {7, 8}) {
    GridSpec g;
    g.seed = seed;
    g.count = 60;
    auto s = run("int-32-oracle", g);
    CHECK(s.mismatch == 0);
    CHECK(s.exact_equal == s.total);
  }
}

TEST_CASE("two-factor identities on random points") {
  for (const char* id : {"int-24", "int-28", "int-17", "int-36", "remark-apostol"}) {
    GridSpec g;
    g.seed = 99;
    auto s = run(id, g);
    CHECK_MESSAGE(s.mismatch == 0, id);
    CHECK_MESSAGE(s.hypothesis_not_met == 0, id);
  }
}

TEST_CASE("hypothesis failures are reported, not skipped") {
  GridSpec g;
  g.coprime = false;
  g.bc_max = 6;
  auto s = run("classical-dr", g);
  CHECK(s.total == 36);
  CHECK(s.hypothesis_not_met == 36 - 23);  // 23 coprime pairs in [1, 6]^2
  CHECK(s.exact_equal == 23);
}
