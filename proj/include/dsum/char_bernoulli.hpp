#pragma once

#include "dsum/bernoulli.hpp"
#include "dsum/cyclotomic.hpp"
#include "dsum/dirichlet.hpp"

#include <memory>
#include <vector>

namespace dsum {

/// B_{n,chi}(x) = k^(n-1) sum_{a=0}^{k-1} conj(chi)(a) B_n((a + x) / k).
/// For non-principal chi this has degree <= n - 1 and B_{0,chi} = 0.
CycloPolynomial gen_bernoulli_poly(const DirichletCharacter& chi, int n);

/// B_{n,chi} = B_{n,chi}(0).
Cyclotomic gen_bernoulli_number(const DirichletCharacter& chi, int n);

/// Periodic generalized Bernoulli function (period k), m >= 1:
///   B̄_{m,chi}(x) = k^(m-1) sum_{n=0}^{k-1} conj(chi)(n) B̄_m((n + x) / k).
/// The n = 0 term only contributes for k = 1, where it reduces to B̄_m(x).
Cyclotomic gen_bernoulli_function(const DirichletCharacter& chi, int m, const Rational& x);

/// B̄_{m,chi}(slope * x + offset) on [lo, hi] as polynomial pieces. Every term
/// of the defining sum breaks where slope * x + offset is an integer, so the
/// pieces share one cut set.
CycloPiecewise gen_bernoulli_piecewise(const DirichletCharacter& chi, int m, const Rational& slope,
                                       const Rational& offset, const Rational& lo, const Rational& hi);

/// Values B̄_{m,chi}(j / den) for j in [0, k * den), i.e. one full period on
/// the grid (1/den)Z. Used by the direct Dedekind-type sums, whose arguments
/// all live on such a grid.
class GenBernoulliGrid {
 public:
  GenBernoulliGrid(const DirichletCharacter& chi, int m, long long den);
  /// B̄_{m,chi}(j / den), any integer j.
  const Cyclotomic& at(long long j) const;
  long long period() const { return static_cast<long long>(values_.size()); }

 private:
  std::vector<Cyclotomic> values_;
};

/// Shared, memoized GenBernoulliGrid keyed by (character, m, den). Thread-safe.
std::shared_ptr<const GenBernoulliGrid> gen_bernoulli_grid(const DirichletCharacter& chi, int m, long long den);

}  // namespace dsum
