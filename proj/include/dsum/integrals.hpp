#pragma once

#include "dsum/cyclotomic.hpp"
#include "dsum/dirichlet.hpp"
#include "dsum/polynomial.hpp"
#include "dsum/rational.hpp"

#include <vector>

namespace dsum {

/// int_0^x B_{n_1}(b_1 z + y_1) ... B_{n_r}(b_r z + y_r) dz.
struct ProductIntegralSpec {
  std::vector<int> degrees;
  std::vector<Rational> slopes;
  std::vector<Rational> offsets;
  Rational x{1};

  int factors() const { return static_cast<int>(degrees.size()); }
  /// Throws std::invalid_argument on size mismatch, r < 1, a negative degree or a zero slope.
  void validate() const;
  /// n_1! ... n_r!
  Rational factorial_weight() const;
  /// Factors reordered by perm (perm[i] is the source index of factor i).
  ProductIntegralSpec permuted(const std::vector<int>& perm) const;
};

template <class T>
struct SidePair {
  T lhs;
  T rhs;
};

// Integrals are returned unscaled (no 1/(n_1!...n_r!) prefactor) unless the
// name says "scaled".

/// Brute force: expand the product into one polynomial and integrate it.
Rational product_integral_direct(const ProductIntegralSpec& spec);
/// The same, as a polynomial in the upper limit (spec.x is ignored).
RationalPolynomial product_integral_direct_poly(const ProductIntegralSpec& spec);

/// Integration-by-parts closed form: the alternating multinomial sum of
/// boundary terms, multiplied back by n_1! ... n_r!.
Rational product_integral_formula(const ProductIntegralSpec& spec);

/// The closed form as printed, i.e. with the 1/(n_1!...n_r!) scaling.
Rational product_integral_formula_scaled(const ProductIntegralSpec& spec);

/// Formula(spec) == formula(spec permuted by perm).
bool permutation_invariance_check(const ProductIntegralSpec& spec, const std::vector<int>& perm);

/// Three-factor closed form for b = 1, y = 0 written out with explicit
/// binomials, scaled by 1/(l! m! n!).
Rational three_factor_closed_form(int l, int m, int n, const Rational& x);

/// Character analogue: factors B_{n_l, chi_l}(b_l z + y_l), all n_l >= 1.
struct CharFormulaResult {
  Cyclotomic value;  // unscaled, full-length outer sum
  Cyclotomic tail;   // terms with a > sum_{l<r} n_l - (r - 1); expected to be zero
};
Cyclotomic char_product_integral_direct(const ProductIntegralSpec& spec, const std::vector<DirichletCharacter>& chars);
CharFormulaResult char_product_integral_formula(const ProductIntegralSpec& spec,
                                                const std::vector<DirichletCharacter>& chars);

/// Both sides of the two-factor reciprocity relation for Bernoulli
/// polynomials with slopes b1, b2 and shifts y1, y2, at x.
SidePair<Rational> two_factor_reciprocity(int n, int m, const Rational& b1, const Rational& b2, const Rational& y1,
                                          const Rational& y2, const Rational& x);
/// The left side as a polynomial in x; the right side as a constant polynomial.
SidePair<RationalPolynomial> two_factor_reciprocity_poly(int n, int m, const Rational& b1, const Rational& b2,
                                                         const Rational& y1, const Rational& y2);

/// sum_a (-1)^a C(N, a) b1^a b2^(N-a) B_{N-a}(b1 x + y1) B_a(b2 x + y2), N = m + n + 1,
/// as a polynomial in x. Constant in x, equal to its value at x = 0.
RationalPolynomial x_independent_combination(int n, int m, const Rational& b1, const Rational& b2, const Rational& y1,
                                             const Rational& y2);

/// b1 = b2 = 1 specialization with the closed right side
///   (-1)^m (m+n+1)(y2-y1) B_{m+n}(y1-y2) + (-1)^m (m+n) B_{m+n+1}(y1-y2).
SidePair<Rational> shifted_identity_28(int n, int m, const Rational& x, const Rational& y1, const Rational& y2);

/// sum_a C(p, a) B_{p-a}(x) B_a(y)  and  p(x+y-1) B_{p-1}(x+y) - (p-1) B_p(x+y),
/// both as polynomials in x for fixed y.
SidePair<RationalPolynomial> bernoulli_convolution_identity(int p, const Rational& y);

/// Spec with b_l = (1 - 2 y_l) / q and upper limit x = q.
ProductIntegralSpec symmetric_spec(const std::vector<int>& degrees, const std::vector<Rational>& offsets,
                                   const Rational& q);
/// Scaled integral for symmetric_spec: 0 when n_1 + ... + n_r + 1 is even,
/// otherwise the reduced single-product closed form. Throws std::invalid_argument
/// if some y_l = 1/2 or q = 0.
Rational symmetric_case_17(const std::vector<int>& degrees, const std::vector<Rational>& offsets, const Rational& q);

/// Character two-factor reciprocity, n, m >= 1 (std::invalid_argument otherwise).
SidePair<Cyclotomic> char_two_factor_reciprocity_36(int n, int m, const Rational& b1, const Rational& b2,
                                                    const Rational& y1, const Rational& y2, const Rational& x,
                                                    const DirichletCharacter& chi1, const DirichletCharacter& chi2);

/// For odd p = m + n, the x-dependent middle expression linking the
/// reciprocity of Apostol's sums to the two-factor relation:
///   sum_a (-1)^(n-a) C(p+1, n-a) b1^(m+a+1) b2^(n-a) B_{n-a}(b1 x) B_{m+a+1}(b2 x)
/// + sum_a (-1)^(m-a) C(p+1, m-a) b2^(n+a+1) b1^(m-a) B_{m-a}(b2 x) B_{n+a+1}(b1 x)
/// + q^(p+1) p B_{p+1},   q = gcd(b1, b2).
Rational apostol_link_middle(int n, int m, long long b1, long long b2, const Rational& x);
/// sum_a (-1)^a C(p+1, a) b1^a b2^(p+1-a) B_{p+1-a} B_a + q^(p+1) p B_{p+1}.
Rational apostol_link_right(int n, int m, long long b1, long long b2);

}  // namespace dsum
