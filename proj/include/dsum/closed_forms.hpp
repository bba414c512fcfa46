#pragma once

#include "dsum/cyclotomic.hpp"
#include "dsum/dirichlet.hpp"
#include "dsum/rational.hpp"

namespace dsum {

// Right-hand sides of the reciprocity formulas. Built from Bernoulli numbers,
// generalized Bernoulli numbers and character values only; none of these
// calls the direct Dedekind-type sums.

/// Memoized B_{n,chi}. Thread-safe.
const Cyclotomic& cached_gen_bernoulli_number(const DirichletCharacter& chi, int n);

/// -1/4 + (b/c + c/b + 1/(bc)) / 12.
Rational dr_rhs(long long b, long long c);

/// sum_j C(p+1, j) (-1)^j b^j c^(p+1-j) B_{p+1-j} B_j + p B_{p+1}.
Rational dr1_rhs(int p, long long b, long long c);

/// B_{1,chi} B_{1,conj chi}.
Cyclotomic dkr_rhs(const DirichletCharacter& chi);

/// sum_j C(p+1, j) b^j c^(p+1-j) B_{j,conj chi} B_{p+1-j,chi}
///   + (p/k) chi(c) conj(chi)(-b) (k^(p+1) - 1) B_{p+1}.
Cyclotomic cck_rhs(int p, long long b, long long c, const DirichletCharacter& chi);

/// sum_{h=1}^{h_end} sum_{j=1}^{j_end} chi1(h) conj(chi2)(j) B̄_deg(u_j j + u_h h).
Cyclotomic character_double_sum(int deg, const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                                long long h_end, long long j_end, const Rational& u_h, const Rational& u_j);

/// sum_j C(p+1, j) B1^j C1^(p+1-j) B_{j,conj chi1} B_{p+1-j,chi2}.
Cyclotomic binomial_char_product(int p, const Rational& B1, const Rational& C1, const DirichletCharacter& chi1,
                                 const DirichletCharacter& chi2);

/// Same modulus k, q = gcd(b, c):
///   binomial_char_product(p, b, c) + p q^(p+1) k^(p-1) sum_{h,a=1}^{k-1} chi1(h) conj(chi2)(a) B̄_{p+1}((ca + bh)/(qk)).
Cyclotomic rp1_rhs(int p, long long b, long long c, const DirichletCharacter& chi1, const DirichletCharacter& chi2);

/// Moduli k1, k2, q = gcd(b, c):
///   binomial_char_product(p, b k2, c k1)
///   + p q^(p+1) (k1 k2)^p sum_h sum_j chi1(h) conj(chi2)(j) B̄_{p+1}(cj/(q k2) + bh/(q k1)),
/// with h, j running to k1, k2 when inclusive and to k1 - 1, k2 - 1 otherwise.
Cyclotomic rp2_rhs(int p, long long b, long long c, const DirichletCharacter& chi1, const DirichletCharacter& chi2,
                   bool inclusive = true);

/// sum_j C(p+1, j) c^j b^(p+1-j) B_{p+1-j,chi1} B_{j,chi2}.
Cyclotomic rp3_rhs(int p, long long b, long long c, const DirichletCharacter& chi1, const DirichletCharacter& chi2);

/// (k/c)^p sum_{h,j=1}^{k-1} chi1(h) conj(chi2)(j) B̄_{p+1}(cj/k + bh/k).
Cyclotomic lek2_closed(int p, long long b, long long c, const DirichletCharacter& chi1, const DirichletCharacter& chi2);

/// (k2/c)^p sum_{h=1}^{k1} sum_{j=1}^{k2} chi1(h) conj(chi2)(j) B̄_{p+1}(cj/k2 + bh/k1).
Cyclotomic lek3_closed(int p, long long b, long long c, const DirichletCharacter& chi1, const DirichletCharacter& chi2);

/// sum_{m=0}^{c-1} B̄_{p+1}((m + x)/c).
Rational raabe_lhs(int p, long long c, const Rational& x);
/// c^(-p) B̄_{p+1}(x).
Rational raabe_rhs(int p, long long c, const Rational& x);

}  // namespace dsum
