#include "dsum/params.hpp"

#include <stdexcept>

namespace dsum {

namespace {

[[noreturn]] void bad(const std::string& key, const std::string& what) {
  throw std::invalid_argument("parameter '" + key + "': " + what);
}

Rational rational_from(const Json& v, const std::string& key) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      bad(key, e.what());
    }
  }
  bad(key, "expected a rational \"p/q\"");
}

}  // namespace

Params::Params(Json j) : j_(std::move(j)) {
  if (!j_.is_object()) throw std::invalid_argument("params must be a JSON object");
}

Params Params::parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("malformed params JSON: ") + e.what());
  }
  return Params(std::move(j));
}

Params& Params::set_rational(const std::string& key, const Rational& r) { return set(key, r.str()); }

Params& Params::set_rationals(const std::string& key, const std::vector<Rational>& rs) {
  Json arr = Json::array();
  for (const auto& r : rs) arr.push_back(r.str());
  return set(key, std::move(arr));
}

Params& Params::set_character(const std::string& key, const DirichletCharacter& chi) {
  return set(key, character_spec(chi));
}

const Json& Params::at(const std::string& key) const {
  auto it = j_.find(key);
  if (it == j_.end()) bad(key, "missing");
  return *it;
}

long long Params::integer(const std::string& key) const {
  const Json& v = at(key);
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_string()) {
    Rational r = rational_from(v, key);
    if (r.is_integer()) return r.to_integer();
  }
  bad(key, "expected an integer");
}

long long Params::integer_or(const std::string& key, long long fallback) const {
  return has(key) ? integer(key) : fallback;
}

int Params::small_int(const std::string& key) const {
  long long v = integer(key);
  if (v < -100000 || v > 100000) bad(key, "out of range");
  return static_cast<int>(v);
}

bool Params::flag(const std::string& key, bool fallback) const {
  if (!has(key)) return fallback;
  const Json& v = at(key);
  if (!v.is_boolean()) bad(key, "expected true or false");
  return v.get<bool>();
}

double Params::real(const std::string& key) const {
  const Json& v = at(key);
  if (v.is_number()) return v.get<double>();
  return rational_from(v, key).to_double();
}

Rational Params::rational(const std::string& key) const { return rational_from(at(key), key); }

Rational Params::rational_or(const std::string& key, const Rational& fallback) const {
  return has(key) ? rational(key) : fallback;
}

std::vector<int> Params::ints(const std::string& key) const {
  const Json& v = at(key);
  if (!v.is_array()) bad(key, "expected an array of integers");
  std::vector<int> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) bad(key, "expected an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<Rational> Params::rationals(const std::string& key) const {
  const Json& v = at(key);
  if (!v.is_array()) bad(key, "expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : v) out.push_back(rational_from(e, key));
  return out;
}

DirichletCharacter Params::character(const std::string& key) const {
  const Json& v = at(key);
  if (!v.is_string()) bad(key, "expected a character \"k:label\"");
  try {
    return parse_character(v.get<std::string>());
  } catch (const std::exception& e) {
    bad(key, e.what());
  }
}

std::vector<DirichletCharacter> Params::characters(const std::string& key) const {
  const Json& v = at(key);
  if (!v.is_array()) bad(key, "expected an array of characters");
  std::vector<DirichletCharacter> out;
  for (const auto& e : v) {
    if (!e.is_string()) bad(key, "expected an array of characters");
    try {
      out.push_back(parse_character(e.get<std::string>()));
    } catch (const std::exception& ex) {
      bad(key, ex.what());
    }
  }
  return out;
}

RationalPolynomial Params::polynomial(const std::string& key) const {
  return RationalPolynomial(rationals(key));
}

std::string character_spec(const DirichletCharacter& chi) {
  return std::to_string(chi.modulus()) + ":" + chi.label();
}

}  // namespace dsum
