#pragma once

#include "dsum/polynomial.hpp"
#include "dsum/rational.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace dsum {

/// Bernoulli number B_n (B_1 = -1/2). Memoized; safe to call concurrently.
Rational bernoulli_number(int n);

/// Bernoulli polynomial B_n(x) = sum_r C(n, r) B_{n-r} x^r. Memoized.
const RationalPolynomial& bernoulli_poly(int n);

/// Periodic Bernoulli function: B_n({x}) for n > 1, the sawtooth ((x)) for n == 1
/// (zero at integers). Requires n >= 1.
Rational periodic_bernoulli(int n, const Rational& x);

/// The factor B̄_n(slope * x + offset) of a piecewise integrand.
struct PeriodicFactor {
  int n = 1;
  Rational slope{1};
  Rational offset{0};
};

/// A function on [lo, hi] that is polynomial between consecutive cut points.
/// Values at the cuts themselves are not represented; they never affect
/// integrals.
template <class Scalar>
class Piecewise {
 public:
  Piecewise() = default;
  Piecewise(std::vector<Rational> cuts, std::vector<Polynomial<Scalar>> pieces)
      : cuts_(std::move(cuts)), pieces_(std::move(pieces)) {
    if (cuts_.size() != pieces_.size() + 1) throw std::invalid_argument("Piecewise: cut/piece count mismatch");
  }

  static Piecewise single(const Polynomial<Scalar>& p, const Rational& lo, const Rational& hi) {
    if (lo == hi) return Piecewise({lo}, {});
    return Piecewise({lo, hi}, {p});
  }

  const std::vector<Rational>& cuts() const { return cuts_; }
  const std::vector<Polynomial<Scalar>>& pieces() const { return pieces_; }

  /// Product on the common refinement of both cut sets; both must span the same interval.
  Piecewise operator*(const Piecewise& o) const {
    if (cuts_.front() != o.cuts_.front() || cuts_.back() != o.cuts_.back())
      throw std::invalid_argument("Piecewise: interval mismatch");
    std::vector<Rational> cuts{cuts_.front()};
    std::vector<Polynomial<Scalar>> pieces;
    size_t i = 0, j = 0;
    while (i < pieces_.size() && j < o.pieces_.size()) {
      const Rational& a = cuts_[i + 1];
      const Rational& b = o.cuts_[j + 1];
      pieces.push_back(pieces_[i] * o.pieces_[j]);
      if (a < b) {
        cuts.push_back(a);
        ++i;
      } else if (b < a) {
        cuts.push_back(b);
        ++j;
      } else {
        cuts.push_back(a);
        ++i;
        ++j;
      }
    }
    return Piecewise(std::move(cuts), std::move(pieces));
  }

  Piecewise operator*(const Polynomial<Scalar>& p) const {
    Piecewise r = *this;
    for (auto& piece : r.pieces_) piece = piece * p;
    return r;
  }

  Piecewise& operator+=(const Piecewise& o) {
    if (pieces_.empty() && cuts_.empty()) return *this = o;
    // Refine both to the union of cuts, then add piecewise.
    Piecewise ones_a = unit_like(o), ones_b = o.unit_like(*this);
    Piecewise a = *this * ones_a;
    Piecewise b = o * ones_b;
    for (size_t k = 0; k < a.pieces_.size(); ++k) a.pieces_[k] += b.pieces_[k];
    return *this = std::move(a);
  }

  /// Exact integral over the whole interval.
  Scalar integrate() const {
    Scalar total = Scalar(0);
    for (size_t k = 0; k < pieces_.size(); ++k) {
      Polynomial<Scalar> anti = pieces_[k].integrate_from_zero();
      total += anti.eval(cuts_[k + 1]);
      total -= anti.eval(cuts_[k]);
    }
    return total;
  }

 private:
  // Constant-one function on o's cuts, used to refine during addition.
  Piecewise unit_like(const Piecewise& o) const {
    std::vector<Polynomial<Scalar>> ones(o.pieces_.size(), Polynomial<Scalar>::constant(Scalar(1)));
    return Piecewise(o.cuts_, std::move(ones));
  }

  std::vector<Rational> cuts_;
  std::vector<Polynomial<Scalar>> pieces_;
};

using RationalPiecewise = Piecewise<Rational>;
using CycloPiecewise = Piecewise<Cyclotomic>;

/// Cut points {x in [lo, hi] : slope * x + offset in Z} together with lo and hi, sorted.
std::vector<Rational> integer_crossings(const Rational& slope, const Rational& offset, const Rational& lo,
                                        const Rational& hi);

/// B̄_n(slope * x + offset) on [lo, hi] as explicit polynomial pieces.
RationalPiecewise periodic_factor_piecewise(const PeriodicFactor& f, const Rational& lo, const Rational& hi);

inline CycloPiecewise to_cyclo(const RationalPiecewise& p) {
  std::vector<CycloPolynomial> pieces;
  pieces.reserve(p.pieces().size());
  for (const auto& q : p.pieces()) pieces.push_back(to_cyclo(q));
  return CycloPiecewise(p.cuts(), std::move(pieces));
}

/// Exact value of  int_lo^hi poly(x) * prod_i B̄_{n_i}(a_i x + d_i) dx.
/// Swapped limits give the negated value.
Rational piecewise_product_integral(const RationalPolynomial& poly, std::span<const PeriodicFactor> factors,
                                    const Rational& lo, const Rational& hi);

}  // namespace dsum
