#pragma once

#include "dsum/dirichlet.hpp"
#include "dsum/rational.hpp"

#include <complex>

namespace dsum {

// Laplace transforms of Bernoulli functions. The "lhs" functions integrate
// block by block: on each block the integrand is polynomial times an
// exponential, integrated exactly through
//   int_a^b e^(-s(v-a)) P(v) dv = sum_i P^(i)(a)/s^(i+1) - e^(-s(b-a)) sum_i P^(i)(b)/s^(i+1),
// and blocks are added until the remaining geometric tail is below 1e-14.
// The "rhs" functions evaluate the closed forms.

/// int_0^inf e^(-su) B̄_n(tu + y) du, n >= 1, t > 0, s > 0.
long double laplace16_lhs(int n, const Rational& t, const Rational& y, long double s);
/// n! t^n / s^(n+1) (sum_{a<=n} B_a({y}) (s/t)^a / a! - (s/t) e^({y}s/t) / (e^(s/t) - 1)).
long double laplace16_rhs(int n, const Rational& t, const Rational& y, long double s);
/// Truncated series -n! t^n/s^(n+1) sum_{a=n+1}^{mu} B_a({y})/a! (s/t)^a.
/// Needs |s/t| < 2 pi (std::invalid_argument otherwise).
long double laplace16_series(int n, const Rational& t, const Rational& y, long double s, int mu);

/// int_0^inf e^(-su) B_m(u) B̄_n(u) du, m >= 0, n >= 1.
long double laplace_product_lhs(int m, int n, long double s);
/// sum_r C(m,r) B_{m-r} (sum_a C(n,a) (n+r-a)! B_a / s^(n+1+r-a) - n! (-1)^r d^r/ds^r [s^-n / (e^s - 1)]).
long double laplace_product_rhs(int m, int n, long double s);

/// (1/n!) int_0^inf e^(-su) B̄_{n,chi}(tu) du, n >= 1, chi non-principal.
std::complex<long double> laplace_char_lhs(const DirichletCharacter& chi, int n, const Rational& t, long double s);
/// (1/s) sum_{a<=n} B_{a,chi}/a! (t/s)^(n-a) - t^(n-1)/s^n sum_{j<k} conj(chi)(j) e^(js/t) / (e^(ks/t) - 1).
std::complex<long double> laplace_char_rhs(const DirichletCharacter& chi, int n, const Rational& t, long double s);

}  // namespace dsum
