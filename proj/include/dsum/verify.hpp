#pragma once

#include "dsum/dirichlet.hpp"
#include "dsum/params.hpp"
#include "dsum/polynomial.hpp"
#include "dsum/report.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dsum {

/// All identity ids, in registry order.
const std::vector<std::string>& identity_ids();
bool is_identity_id(std::string_view id);

struct VerifyOptions {
  /// Relative tolerance for the float (Laplace) checks; a "tolerance" entry
  /// in the params overrides it.
  double tolerance = 1e-9;
  /// Absolute floor used once both sides are below 1e-8 in magnitude.
  double abs_floor = 1e-12;
};

/// Runs the checker for id on params.
///
/// Throws std::invalid_argument for an unknown id or malformed params. A failed
/// theorem precondition is not an error: the report gets verdict
/// hypothesis-not-met, unless params has "force": true, in which case both
/// sides are evaluated anyway and the notes say so.
VerificationReport verify_identity(std::string_view id, const Params& params, const VerifyOptions& opts = {});

/// em-theorem with explicit arguments.
VerificationReport verify_euler_maclaurin(const DirichletCharacter& chi, const RationalPolynomial& f,
                                          const Rational& alpha, const Rational& beta, int l);

/// laplace-16 with explicit arguments. When s/t < 2 pi the series form
/// truncated after mu_trunc terms is compared as well.
VerificationReport laplace_check(int n, const Rational& t, const Rational& y, double s, int mu_trunc = 80,
                                 double tolerance = 1e-9);

}  // namespace dsum
