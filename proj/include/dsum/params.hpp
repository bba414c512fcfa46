#pragma once

#include "dsum/dirichlet.hpp"
#include "dsum/polynomial.hpp"
#include "dsum/rational.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace dsum {

using Json = nlohmann::ordered_json;

/// Named parameters of one verification point, backed by a JSON object.
/// Rationals are "p/q" strings (plain integers are accepted), characters are
/// "k:label" strings. Getters throw std::invalid_argument naming the key on a
/// missing or malformed entry.
class Params {
 public:
  Params() : j_(Json::object()) {}
  explicit Params(Json j);

  static Params parse(const std::string& text);

  const Json& json() const { return j_; }
  bool has(const std::string& key) const { return j_.contains(key); }

  template <class T>
  Params& set(const std::string& key, T&& value) {
    j_[key] = std::forward<T>(value);
    return *this;
  }
  Params& set_rational(const std::string& key, const Rational& r);
  Params& set_rationals(const std::string& key, const std::vector<Rational>& rs);
  Params& set_character(const std::string& key, const DirichletCharacter& chi);

  long long integer(const std::string& key) const;
  long long integer_or(const std::string& key, long long fallback) const;
  int small_int(const std::string& key) const;
  bool flag(const std::string& key, bool fallback = false) const;
  double real(const std::string& key) const;
  Rational rational(const std::string& key) const;
  Rational rational_or(const std::string& key, const Rational& fallback) const;
  std::vector<int> ints(const std::string& key) const;
  std::vector<Rational> rationals(const std::string& key) const;
  DirichletCharacter character(const std::string& key) const;
  std::vector<DirichletCharacter> characters(const std::string& key) const;
  /// Coefficient list (ascending powers) as a polynomial.
  RationalPolynomial polynomial(const std::string& key) const;

 private:
  const Json& at(const std::string& key) const;
  Json j_;
};

/// "k:label" with the canonical dot-joined label.
std::string character_spec(const DirichletCharacter& chi);

}  // namespace dsum
