#pragma once

#include "dsum/cyclotomic.hpp"
#include "dsum/dirichlet.hpp"
#include "dsum/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dsum {

// Every sum here is evaluated by literal summation over its defining range.
// Closed forms live elsewhere; these are the oracle side of each reciprocity
// check.

/// s(b, c) = sum_{j mod c} ((j/c)) ((bj/c)).
Rational classical_dedekind_sum(long long b, long long c);

/// s_p(b, c) = sum_{j=0}^{c-1} B̄_p(bj/c) B̄_1(j/c).
Rational apostol_sum(int p, long long b, long long c);

/// s_p(b, c : chi1, chi2) = sum_{n=0}^{ck-1} chi1(n) B̄_{p,chi2}(bn/c) B̄_1(n/(ck)).
/// Both characters must share the modulus k (std::invalid_argument otherwise).
Cyclotomic char_pair_sum(int p, long long b, long long c, const DirichletCharacter& chi1,
                         const DirichletCharacter& chi2);

/// s_p(b, c : chi) = s_p(b, c : chi, chi); p = 1 gives s(b, c : chi).
Cyclotomic char_single_sum(int p, long long b, long long c, const DirichletCharacter& chi);

/// Ŝ_p(b, c : chi1, chi2) = sum_{n=0}^{c k1 k2 - 1} chi1(n) B̄_{p,chi2}(nb/c) B̄_1(n/(c k1 k2)).
Cyclotomic hat_sum(int p, long long b, long long c, const DirichletCharacter& chi1, const DirichletCharacter& chi2);

/// S̃_p(b, c : chi1, chi2) = sum_{n=0}^{c k1 - 1} chi1(n) B̄_{p,chi2}(n b k2 / (c k1)) B̄_1(n/(c k1)).
Cyclotomic tilde_sum(int p, long long b, long long c, const DirichletCharacter& chi1,
                     const DirichletCharacter& chi2);

/// sum_{n=1}^{ck-1} chi1(n) B̄_{p+1,chi2}(bn/c), same modulus k.
Cyclotomic char_weighted_power_sum(int p, long long b, long long c, const DirichletCharacter& chi1,
                                   const DirichletCharacter& chi2);

/// Its double-sum form (valid for gcd(b, c) = 1 and matching parity):
///   (k/c)^p sum_{h=1}^{k-1} sum_{j=1}^{k-1} chi1(h) conj(chi2)(j) B̄_{p+1}((cj + bh)/k).
Cyclotomic char_weighted_power_double_sum(int p, long long b, long long c, const DirichletCharacter& chi1,
                                          const DirichletCharacter& chi2);

/// Two-modulus counterpart: sum_{n=1}^{c k1} chi1(n) B̄_{p+1,chi2}(n b k2 / (c k1)).
Cyclotomic tilde_weighted_power_sum(int p, long long b, long long c, const DirichletCharacter& chi1,
                                    const DirichletCharacter& chi2);

/// Sum families, as named on the command line and in JSON.
enum class SumFamily { Classical, Apostol, CharSingle, CharPair, Hat, Tilde };

std::optional<SumFamily> parse_sum_family(const std::string& name);
std::string to_string(SumFamily f);

/// (-1)^(p+1) chi1(-1) chi2(-1): the sign whose value -1 forces the
/// character sums to vanish.
int reflection_sign(int p, const DirichletCharacter& chi1, const DirichletCharacter& chi2);

}  // namespace dsum
