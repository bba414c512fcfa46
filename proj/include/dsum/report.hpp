#pragma once

#include "dsum/cyclotomic.hpp"
#include "dsum/params.hpp"
#include "dsum/polynomial.hpp"
#include "dsum/rational.hpp"

#include <complex>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace dsum {

enum class Verdict { ExactEqual, EqualWithinTol, Mismatch, HypothesisNotMet, VacuousZero };

std::string to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view name);

/// One side of a comparison: nothing, an exact value, an exact polynomial
/// (for identities checked coefficient-wise), or a float value.
using Scalar =
    std::variant<std::monostate, Rational, Cyclotomic, RationalPolynomial, double, std::complex<double>>;

/// Rational -> "p/q"; Cyclotomic -> {"order": e, "coeffs": [...]};
/// polynomial -> {"coeffs": [...]}; double -> number; complex -> {"re": .., "im": ..};
/// empty -> null.
Json scalar_to_json(const Scalar& s);
/// Inverse of scalar_to_json for the exact kinds and plain numbers.
Scalar scalar_from_json(const Json& j);

Json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

struct SubCheck {
  std::string name;
  Scalar lhs;
  Scalar rhs;
  Verdict verdict = Verdict::Mismatch;
  std::optional<double> residual;
  std::string notes;
};

struct VerificationReport {
  std::string id;
  Params params;
  Scalar lhs;
  Scalar rhs;
  Verdict verdict = Verdict::Mismatch;
  std::optional<double> residual;
  std::string notes;
  std::vector<SubCheck> checks;

  Json to_json() const;
};

/// Exact comparison. Cyclotomic values of different orders are embedded into
/// a common field first, so the stored scalars are then directly comparable.
Verdict compare_exact(Scalar& lhs, Scalar& rhs);

/// Float comparison: relative tolerance rel, switching to the absolute floor
/// abs_floor when both magnitudes are below 1e-8. Stores |lhs - rhs|.
Verdict compare_float(double lhs, double rhs, double rel, double abs_floor, std::optional<double>& residual);
Verdict compare_float(std::complex<double> lhs, std::complex<double> rhs, double rel, double abs_floor,
                      std::optional<double>& residual);

SubCheck exact_check(std::string name, Scalar lhs, Scalar rhs, std::string notes = {});

}  // namespace dsum
