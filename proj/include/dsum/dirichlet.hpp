#pragma once

#include "dsum/cyclotomic.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace dsum {

/// One cyclic factor of (Z/k)^x: a generator of (Z/p^a)^x (or one of the pair
/// {-1, 5} for p = 2, a >= 3), with its CRT lift to Z/k.
struct UnitGenerator {
  long long prime = 0;
  long long prime_power = 0;
  long long residue = 0;  // generator mod prime_power
  long long lifted = 0;   // residue mod prime_power, 1 mod k / prime_power
  long long order = 0;
};

enum class CharacterFilter { All, Primitive, NonprincipalPrimitive };

/// Dirichlet character mod k given by exponents on the fixed generator set:
/// chi(g_i) = exp(2 pi i * exponent_i / order(g_i)).
///
/// Immutable; copies share the evaluation table.
class DirichletCharacter {
 public:
  /// Throws std::invalid_argument when modulus < 1 or the exponent tuple does
  /// not match the generator set.
  DirichletCharacter(long long modulus, std::vector<long long> exponents);

  long long modulus() const;
  const std::vector<long long>& exponents() const;
  const std::vector<UnitGenerator>& generators() const;
  /// Order e of chi; values lie in Q(zeta_e).
  int order() const;
  long long conductor() const;
  bool is_primitive() const { return conductor() == modulus(); }
  bool is_principal() const;
  /// chi(-1) as +1 / -1.
  int parity() const;
  /// Exponents joined by '.', e.g. "1.0"; "0" when (Z/k)^x is trivial.
  std::string label() const;

  /// chi(n) = zeta_e^j; returns j in [0, e) or -1 when gcd(n, k) > 1.
  int value_exponent(long long n) const;
  Cyclotomic operator()(long long n) const;

  DirichletCharacter conjugate() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents() == b.exponents();
  }

 private:
  struct Data;
  std::shared_ptr<const Data> d_;
};

/// Fixed generator set of (Z/k)^x in canonical order (primes ascending; -1 before 5).
std::vector<UnitGenerator> unit_generators(long long modulus);

/// Characters mod k in canonical order (lexicographic exponent tuples).
std::vector<DirichletCharacter> enumerate_characters(long long modulus, CharacterFilter filter = CharacterFilter::All);

/// Parses a label ("1.0") or an exponent list ("1,0").
DirichletCharacter character_from_label(long long modulus, std::string_view label);

/// Parses "k:label" (e.g. "5:1", "8:1.1", "8:1,1").
DirichletCharacter parse_character(std::string_view spec);

}  // namespace dsum
