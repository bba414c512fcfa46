#include "dsum/report.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dsum {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ExactEqual: return "exact-equal";
    case Verdict::EqualWithinTol: return "equal-within-tol";
    case Verdict::Mismatch: return "mismatch";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::VacuousZero: return "vacuous-zero";
  }
  return "mismatch";
}

std::optional<Verdict> parse_verdict(std::string_view name) {
  for (Verdict v : {Verdict::ExactEqual, Verdict::EqualWithinTol, Verdict::Mismatch, Verdict::HypothesisNotMet,
                    Verdict::VacuousZero})
    if (to_string(v) == name) return v;
  return std::nullopt;
}

Json cyclotomic_to_json(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& r : c.coeffs()) coeffs.push_back(r.str());
  Json j = Json::object();
  j["order"] = c.order();
  j["coeffs"] = std::move(coeffs);
  return j;
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
    throw std::invalid_argument("cyclotomic JSON needs \"order\" and \"coeffs\"");
  int order = j.at("order").get<int>();
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  std::vector<Rational> coeffs;
  for (const auto& e : j.at("coeffs")) coeffs.push_back(Rational::parse(e.get<std::string>()));
  return Cyclotomic(order, std::move(coeffs));
}

Json scalar_to_json(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, Rational>) {
          return v.str();
        } else if constexpr (std::is_same_v<T, Cyclotomic>) {
          return cyclotomic_to_json(v);
        } else if constexpr (std::is_same_v<T, RationalPolynomial>) {
          Json coeffs = Json::array();
          for (const auto& c : v.coeffs()) coeffs.push_back(c.str());
          Json j = Json::object();
          j["coeffs"] = std::move(coeffs);
          return j;
        } else if constexpr (std::is_same_v<T, double>) {
          return v;
        } else {
          Json j = Json::object();
          j["re"] = v.real();
          j["im"] = v.imag();
          return j;
        }
      },
      s);
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_null()) return std::monostate{};
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number()) return j.get<double>();
  if (j.is_object() && j.contains("order")) return cyclotomic_from_json(j);
  if (j.is_object() && j.contains("coeffs")) {
    std::vector<Rational> coeffs;
    for (const auto& e : j.at("coeffs")) coeffs.push_back(Rational::parse(e.get<std::string>()));
    return RationalPolynomial(std::move(coeffs));
  }
  if (j.is_object() && j.contains("re")) return std::complex<double>(j.at("re").get<double>(), j.at("im").get<double>());
  throw std::invalid_argument("unrecognized scalar JSON");
}

Json VerificationReport::to_json() const {
  Json j = Json::object();
  j["id"] = id;
  j["params"] = params.json();
  j["lhs"] = scalar_to_json(lhs);
  j["rhs"] = scalar_to_json(rhs);
  j["verdict"] = to_string(verdict);
  if (residual) j["residual"] = *residual;
  if (!notes.empty()) j["notes"] = notes;
  if (!checks.empty()) {
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json cj = Json::object();
      cj["name"] = c.name;
      cj["lhs"] = scalar_to_json(c.lhs);
      cj["rhs"] = scalar_to_json(c.rhs);
      cj["verdict"] = to_string(c.verdict);
      if (c.residual) cj["residual"] = *c.residual;
      if (!c.notes.empty()) cj["notes"] = c.notes;
      arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
  }
  return j;
}

Verdict compare_exact(Scalar& lhs, Scalar& rhs) {
  if (auto* a = std::get_if<RationalPolynomial>(&lhs)) {
    auto* b = std::get_if<RationalPolynomial>(&rhs);
    if (!b) throw std::logic_error("compare_exact: polynomial against non-polynomial");
    return *a == *b ? Verdict::ExactEqual : Verdict::Mismatch;
  }
  if (auto* a = std::get_if<Rational>(&lhs)) {
    if (auto* b = std::get_if<Rational>(&rhs)) return *a == *b ? Verdict::ExactEqual : Verdict::Mismatch;
    lhs = Cyclotomic(*a);
  }
  if (auto* b = std::get_if<Rational>(&rhs)) rhs = Cyclotomic(*b);
  auto* a = std::get_if<Cyclotomic>(&lhs);
  auto* b = std::get_if<Cyclotomic>(&rhs);
  if (!a || !b) throw std::logic_error("compare_exact needs exact scalars");
  int e = std::lcm(a->order(), b->order());
  *a = a->embed(e);
  *b = b->embed(e);
  return *a == *b ? Verdict::ExactEqual : Verdict::Mismatch;
}

namespace {

Verdict judge(double diff, double scale, double rel, double abs_floor) {
  if (!std::isfinite(diff)) return Verdict::Mismatch;
  double bound = scale < 1e-8 ? abs_floor : rel * scale;
  return diff <= std::max(bound, abs_floor) ? Verdict::EqualWithinTol : Verdict::Mismatch;
}

}  // namespace

Verdict compare_float(double lhs, double rhs, double rel, double abs_floor, std::optional<double>& residual) {
  double diff = std::fabs(lhs - rhs);
  residual = diff;
  return judge(diff, std::max(std::fabs(lhs), std::fabs(rhs)), rel, abs_floor);
}

Verdict compare_float(std::complex<double> lhs, std::complex<double> rhs, double rel, double abs_floor,
                      std::optional<double>& residual) {
  double diff = std::abs(lhs - rhs);
  residual = diff;
  return judge(diff, std::max(std::abs(lhs), std::abs(rhs)), rel, abs_floor);
}

SubCheck exact_check(std::string name, Scalar lhs, Scalar rhs, std::string notes) {
  SubCheck c;
  c.name = std::move(name);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.verdict = compare_exact(c.lhs, c.rhs);
  c.notes = std::move(notes);
  return c;
}

}  // namespace dsum
