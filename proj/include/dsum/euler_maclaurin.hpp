#pragma once

#include "dsum/cyclotomic.hpp"
#include "dsum/dirichlet.hpp"
#include "dsum/polynomial.hpp"
#include "dsum/rational.hpp"

#include <vector>

namespace dsum {

/// The factor B̄_{m,chi}(slope * x + offset).
struct CharPeriodicFactor {
  DirichletCharacter chi;
  int m = 1;
  Rational slope{1};
  Rational offset{0};
};

/// Exact  int_lo^hi poly(x) prod_i B̄_{m_i,chi_i}(a_i x + d_i) dx.
Cyclotomic char_periodic_product_integral(const RationalPolynomial& poly, const std::vector<CharPeriodicFactor>& factors,
                                          const Rational& lo, const Rational& hi);

/// sum' over integers alpha <= n <= beta of chi(n) f(n); an endpoint that is
/// an integer counts with weight 1/2.
Cyclotomic em_primed_sum(const DirichletCharacter& chi, const RationalPolynomial& f, const Rational& alpha,
                         const Rational& beta);

/// chi(-1) sum_{j=0}^{l} (-1)^(j+1)/(j+1)! [B̄_{j+1,conj chi}(beta) f^(j)(beta) - B̄_{j+1,conj chi}(alpha) f^(j)(alpha)]
/// + chi(-1) (-1)^l/(l+1)! int_alpha^beta B̄_{l+1,conj chi}(u) f^(l+1)(u) du.
Cyclotomic em_right_side(const DirichletCharacter& chi, const RationalPolynomial& f, const Rational& alpha,
                         const Rational& beta, int l);

}  // namespace dsum
