#pragma once

#include "dsum/params.hpp"
#include "dsum/report.hpp"
#include "dsum/verify.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dsum {

/// Grid ranges for a sweep. Empty fields fall back to the per-id default
/// grid (see expand_grid).
struct GridSpec {
  std::vector<int> p, n, m, l;
  std::optional<long long> bc_max;
  std::vector<long long> k;
  std::vector<std::pair<long long, long long>> k_pairs;
  std::optional<long long> scale_max;  // lek2: q = 1..scale_max
  std::optional<int> count;            // random grids
  std::uint64_t seed = 1;
  std::optional<bool> coprime;         // restrict to gcd(b, c) = 1
};

/// Expands the grid for id into parameter points, in a fixed order.
///
/// Defaults: b, c run over 1..bc_max; characters over the non-principal
/// primitive characters of each modulus (all non-principal ones for
/// em-theorem); pairs of characters share a modulus unless k_pairs is used.
/// Random grids draw from std::mt19937_64 seeded with seed, so the expansion
/// is reproducible.
std::vector<Params> expand_grid(std::string_view id, const GridSpec& grid);

struct SweepSummary {
  std::string id;
  long long total = 0, exact_equal = 0, within_tol = 0, vacuous = 0, hypothesis_not_met = 0, mismatch = 0;
  Json to_json() const;
};

struct SweepResult {
  std::vector<VerificationReport> reports;  // in grid order
  SweepSummary summary;
};

/// Runs verify_identity on every point with up to jobs worker threads.
/// A point that throws is reported as a mismatch with the error in notes.
SweepResult sweep(std::string_view id, const std::vector<Params>& points, int jobs = 1, const VerifyOptions& opts = {});

/// "2..6" or "1,3,5" (or a mix, "1,4..6") into a sorted list without repeats.
std::vector<long long> parse_range_list(std::string_view text);
/// "3:4,3:5".
std::vector<std::pair<long long, long long>> parse_pair_list(std::string_view text);

}  // namespace dsum
