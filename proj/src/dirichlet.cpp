#include "dsum/dirichlet.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dsum {

namespace {

long long mod_pos(long long a, long long m) { return ((a % m) + m) % m; }

long long mul_order(long long g, long long m) {
  long long x = g % m, n = 1;
  while (x != 1) {
    x = x * g % m;
    ++n;
  }
  return n;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> f;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    f.emplace_back(p, a);
  }
  if (n > 1) f.emplace_back(n, 1);
  return f;
}

// Lift r mod q to Z/k with value 1 modulo k / q.
long long crt_lift(long long r, long long q, long long k) {
  long long rest = k / q;
  for (long long x = r; x < k; x += q)
    if (x % rest == 1 % rest) return x;
  throw std::logic_error("crt_lift failed");
}

}  // namespace

std::vector<UnitGenerator> unit_generators(long long k) {
  if (k < 1) throw std::invalid_argument("modulus must be positive");
  std::vector<UnitGenerator> gens;
  for (auto [p, a] : factorize(k)) {
    long long q = 1;
    for (int i = 0; i < a; ++i) q *= p;
    if (p == 2) {
      if (a == 1) continue;
      gens.push_back({2, q, q - 1, crt_lift(q - 1, q, k), 2});
      if (a >= 3) gens.push_back({2, q, 5, crt_lift(5, q, k), q / 4});
      continue;
    }
    long long phi = q / p * (p - 1);
    long long g = 2;
    while (std::gcd(g, q) != 1 || mul_order(g, q) != phi) ++g;
    gens.push_back({p, q, g, crt_lift(g, q, k), phi});
  }
  return gens;
}

struct DirichletCharacter::Data {
  long long modulus = 1;
  std::vector<UnitGenerator> gens;
  std::vector<long long> exponents;
  int order = 1;
  std::vector<int> table;  // value exponent for n in [0, k), -1 off units
  long long conductor = 1;
};

DirichletCharacter::DirichletCharacter(long long k, std::vector<long long> exponents) {
  auto d = std::make_shared<Data>();
  d->modulus = k;
  d->gens = unit_generators(k);
  if (exponents.size() != d->gens.size())
    throw std::invalid_argument("character exponent tuple has wrong length for modulus " + std::to_string(k));
  for (size_t i = 0; i < exponents.size(); ++i) exponents[i] = mod_pos(exponents[i], d->gens[i].order);
  d->exponents = std::move(exponents);

  long long e = 1, group_exp = 1;
  for (size_t i = 0; i < d->gens.size(); ++i) {
    long long ord = d->gens[i].order;
    group_exp = std::lcm(group_exp, ord);
    e = std::lcm(e, ord / std::gcd(d->exponents[i], ord));
  }
  d->order = static_cast<int>(e);

  // Discrete logs per generator by walking each component's cyclic group.
  // For 2^a (a >= 3) the pair (-1, 5) is handled as a 2-dimensional walk.
  std::vector<long long> acc(static_cast<size_t>(k), 0);  // exponent in Z/group_exp
  std::vector<bool> unit(static_cast<size_t>(k), false);
  for (long long n = 0; n < k; ++n) unit[static_cast<size_t>(n)] = std::gcd(n, k) == 1;
  size_t gi = 0;
  while (gi < d->gens.size()) {
    const UnitGenerator& g = d->gens[gi];
    long long q = g.prime_power;
    std::vector<long long> contrib(static_cast<size_t>(q), 0);
    if (g.prime == 2 && gi + 1 < d->gens.size() && d->gens[gi + 1].prime == 2) {
      const UnitGenerator& g5 = d->gens[gi + 1];
      long long w1 = d->exponents[gi] * (group_exp / g.order);
      long long w2 = d->exponents[gi + 1] * (group_exp / g5.order);
      long long x = 1;
      for (long long t = 0; t < g5.order; ++t) {
        contrib[static_cast<size_t>(x)] = mod_pos(t * w2, group_exp);
        contrib[static_cast<size_t>(q - x)] = mod_pos(w1 + t * w2, group_exp);
        x = x * 5 % q;
      }
      gi += 2;
    } else {
      long long w = d->exponents[gi] * (group_exp / g.order);
      long long x = 1;
      for (long long t = 0; t < g.order; ++t) {
        contrib[static_cast<size_t>(x)] = mod_pos(t * w, group_exp);
        x = x * g.residue % q;
      }
      gi += 1;
    }
    for (long long n = 0; n < k; ++n)
      if (unit[static_cast<size_t>(n)]) acc[static_cast<size_t>(n)] += contrib[static_cast<size_t>(n % q)];
  }
  d->table.assign(static_cast<size_t>(k), -1);
  for (long long n = 0; n < k; ++n) {
    if (!unit[static_cast<size_t>(n)]) continue;
    long long t = mod_pos(acc[static_cast<size_t>(n)], group_exp);
    d->table[static_cast<size_t>(n)] = static_cast<int>(t / (group_exp / e));
  }
  // k = 1: the single residue 0 is a unit and chi(0) = 1.

  // Conductor: least f | k with chi trivial on units = 1 (mod f).
  for (long long f = 1; f <= k; ++f) {
    if (k % f) continue;
    bool trivial = true;
    for (long long n = 1; n < k && trivial; n += f)
      if (unit[static_cast<size_t>(n)] && d->table[static_cast<size_t>(n)] != 0) trivial = false;
    if (trivial) {
      d->conductor = f;
      break;
    }
  }
  d_ = std::move(d);
}

long long DirichletCharacter::modulus() const { return d_->modulus; }
const std::vector<long long>& DirichletCharacter::exponents() const { return d_->exponents; }
const std::vector<UnitGenerator>& DirichletCharacter::generators() const { return d_->gens; }
int DirichletCharacter::order() const { return d_->order; }
long long DirichletCharacter::conductor() const { return d_->conductor; }
bool DirichletCharacter::is_principal() const { return d_->order == 1; }

int DirichletCharacter::parity() const {
  if (d_->modulus <= 2) return 1;
  return value_exponent(d_->modulus - 1) == 0 ? 1 : -1;
}

std::string DirichletCharacter::label() const {
  if (d_->exponents.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < d_->exponents.size(); ++i) os << (i ? "." : "") << d_->exponents[i];
  return os.str();
}

int DirichletCharacter::value_exponent(long long n) const {
  return d_->table[static_cast<size_t>(mod_pos(n, d_->modulus))];
}

Cyclotomic DirichletCharacter::operator()(long long n) const {
  int j = value_exponent(n);
  if (j < 0) return Cyclotomic(0);
  return Cyclotomic::root(d_->order, j);
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::vector<long long> ex = d_->exponents;
  for (size_t i = 0; i < ex.size(); ++i) ex[i] = mod_pos(-ex[i], d_->gens[i].order);
  return DirichletCharacter(d_->modulus, std::move(ex));
}

std::vector<DirichletCharacter> enumerate_characters(long long k, CharacterFilter filter) {
  auto gens = unit_generators(k);
  std::vector<long long> ex(gens.size(), 0);
  std::vector<DirichletCharacter> out;
  while (true) {
    DirichletCharacter chi(k, ex);
    bool keep = filter == CharacterFilter::All || (chi.is_primitive() && (filter == CharacterFilter::Primitive ||
                                                                          !chi.is_principal()));
    if (keep) out.push_back(std::move(chi));
    // Odometer, last generator fastest.
    size_t i = ex.size();
    while (i > 0) {
      --i;
      if (++ex[i] < gens[i].order) break;
      ex[i] = 0;
      if (i == 0) return out;
    }
    if (ex.empty()) return out;
  }
}

DirichletCharacter character_from_label(long long k, std::string_view label) {
  auto gens = unit_generators(k);
  std::vector<long long> ex;
  if (gens.empty()) {
    if (label == "0" || label.empty()) return DirichletCharacter(k, {});
    throw std::invalid_argument("invalid character label '" + std::string(label) + "' for modulus " +
                                std::to_string(k));
  }
  size_t pos = 0;
  while (pos <= label.size()) {
    size_t next = label.find_first_of(".,", pos);
    std::string_view tok = label.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
      throw std::invalid_argument("invalid character label '" + std::string(label) + "'");
    ex.push_back(v);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (ex.size() != gens.size())
    throw std::invalid_argument("invalid character label '" + std::string(label) + "' for modulus " +
                                std::to_string(k));
  for (size_t i = 0; i < ex.size(); ++i)
    if (ex[i] < 0 || ex[i] >= gens[i].order)
      throw std::invalid_argument("character exponent out of range in '" + std::string(label) + "'");
  return DirichletCharacter(k, std::move(ex));
}

DirichletCharacter parse_character(std::string_view spec) {
  size_t colon = spec.find(':');
  if (colon == std::string_view::npos) throw std::invalid_argument("character spec must be 'k:label'");
  long long k = 0;
  auto mod = spec.substr(0, colon);
  auto [ptr, ec] = std::from_chars(mod.data(), mod.data() + mod.size(), k);
  if (ec != std::errc() || ptr != mod.data() + mod.size() || k < 1)
    throw std::invalid_argument("invalid character modulus in '" + std::string(spec) + "'");
  return character_from_label(k, spec.substr(colon + 1));
}

}  // namespace dsum
