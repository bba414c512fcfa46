#include "dsum/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace dsum {

namespace {

using IntPoly = std::vector<long long>;

// Exact division of integer polynomials, divisor monic.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  size_t dn = den.size() - 1;
  IntPoly q(num.size() - dn, 0);
  for (size_t i = num.size(); i-- > dn;) {
    long long c = num[i];
    q[i - dn] = c;
    for (size_t t = 0; t <= dn; ++t) num[i - dn + t] -= c * den[t];
  }
  return q;
}

std::unique_ptr<CycloField> build_field(int e) {
  // Phi_e = (x^e - 1) / prod_{d | e, d < e} Phi_d.
  IntPoly p(static_cast<size_t>(e) + 1, 0);
  p[0] = -1;
  p[static_cast<size_t>(e)] = 1;
  for (int d = 1; d < e; ++d)
    if (e % d == 0) p = divide_exact(p, cyclo_field(d).modulus);
  auto f = std::make_unique<CycloField>();
  f->order = e;
  f->degree = static_cast<int>(p.size()) - 1;
  f->modulus = std::move(p);
  return f;
}

// Reduce an arbitrary-length polynomial in place modulo the monic Phi_e.
std::vector<Rational> reduce(const CycloField& f, std::vector<Rational> poly) {
  const size_t deg = static_cast<size_t>(f.degree);
  for (size_t i = poly.size(); i-- > deg;) {
    if (poly[i].is_zero()) continue;
    Rational c = poly[i];
    for (size_t t = 0; t < deg; ++t) {
      long long m = f.modulus[t];
      if (m != 0) poly[i - deg + t] -= c * Rational(m);
    }
  }
  poly.resize(deg);
  return poly;
}

// Polynomial helpers over Q for the extended Euclidean inverse.
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void poly_divmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  Rational lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    size_t shift = a.size() - b.size();
    Rational c = a.back() * lead_inv;
    q[shift] = c;
    for (size_t t = 0; t < b.size(); ++t) a[shift + t] -= c * b[t];
    trim(a);
  }
  r = std::move(a);
}

}  // namespace

int euler_phi(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return static_cast<int>(result);
}

const CycloField& cyclo_field(int order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
  static std::recursive_mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> fields;
  std::lock_guard lock(mu);
  auto it = fields.find(order);
  if (it != fields.end()) return *it->second;
  auto f = build_field(order);
  const CycloField& ref = *f;
  fields.emplace(order, std::move(f));
  return ref;
}

Cyclotomic::Cyclotomic(const Rational& r) : field_(&cyclo_field(1)), coeffs_{r} {}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> poly_in_zeta) : field_(&cyclo_field(order)) {
  if (poly_in_zeta.size() < static_cast<size_t>(field_->degree))
    poly_in_zeta.resize(static_cast<size_t>(field_->degree));
  coeffs_ = reduce(*field_, std::move(poly_in_zeta));
}

Cyclotomic Cyclotomic::root(int order, long long j) {
  long long e = order;
  long long jj = ((j % e) + e) % e;
  std::vector<Rational> p(static_cast<size_t>(jj) + 1);
  p[static_cast<size_t>(jj)] = Rational(1);
  return Cyclotomic(order, std::move(p));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Rational Cyclotomic::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
  return coeffs_[0];
}

Cyclotomic Cyclotomic::embed(int target) const {
  int e = order();
  if (target == e) return *this;
  if (target % e != 0) throw std::invalid_argument("embedding requires order | target");
  const size_t stride = static_cast<size_t>(target / e);
  std::vector<Rational> p(coeffs_.empty() ? 1 : (coeffs_.size() - 1) * stride + 1);
  for (size_t j = 0; j < coeffs_.size(); ++j) p[j * stride] = coeffs_[j];
  return Cyclotomic(target, std::move(p));
}

Cyclotomic Cyclotomic::mul_root(long long j) const {
  long long e = order();
  size_t jj = static_cast<size_t>(((j % e) + e) % e);
  if (jj == 0) return *this;
  std::vector<Rational> p(coeffs_.size() + jj);
  for (size_t i = 0; i < coeffs_.size(); ++i) p[i + jj] = coeffs_[i];
  return Cyclotomic(field_, reduce(*field_, std::move(p)));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  // Extended Euclid: find s with s * a == 1 (mod Phi_e).
  QPoly m;
  for (long long c : field_->modulus) m.emplace_back(c);
  QPoly a(coeffs_.begin(), coeffs_.end());
  trim(a);
  QPoly r0 = m, r1 = a, s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational inv = r1[0].inverse();
  for (auto& c : s1) c *= inv;
  return Cyclotomic(order(), std::move(s1));
}

Cyclotomic Cyclotomic::conj() const {
  // zeta^j -> zeta^(e - j); do it on the unreduced representation.
  int e = order();
  if (e <= 2) return *this;
  std::vector<Rational> p(static_cast<size_t>(e));
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    p[(static_cast<size_t>(e) - j) % static_cast<size_t>(e)] += coeffs_[j];
  }
  return Cyclotomic(e, std::move(p));
}

std::complex<long double> Cyclotomic::to_complex() const {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  std::complex<long double> sum = 0;
  for (size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j].is_zero()) continue;
    long double ang = two_pi * static_cast<long double>(j) / static_cast<long double>(order());
    sum += coeffs_[j].to_long_double() * std::complex<long double>(std::cos(ang), std::sin(ang));
  }
  return sum;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

int common_order(int a, int b) { return static_cast<int>(lcm_ll(a, b)); }

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  int e = common_order(order(), o.order());
  if (e != order()) *this = embed(e);
  const Cyclotomic& rhs = o.order() == e ? o : o.embed(e);
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.order() == 1) return *this *= o.coeffs_[0];
  if (order() == 1) {
    Rational s = coeffs_[0];
    *this = o;
    return *this *= s;
  }
  int e = common_order(order(), o.order());
  Cyclotomic a = embed(e);
  Cyclotomic b = o.embed(e);
  std::vector<Rational> p(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      p[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  field_ = a.field_;
  coeffs_ = reduce(*field_, std::move(p));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  if (o.order() == 1) {
    Rational inv = o.coeffs_[0].inverse();
    return *this *= inv;
  }
  return *this *= o.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() == b.order()) return a.coeffs_ == b.coeffs_;
  int e = common_order(a.order(), b.order());
  return a.embed(e).coeffs_ == b.embed(e).coeffs_;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
  os << "[e=" << c.order() << ":";
  for (size_t i = 0; i < c.coeffs().size(); ++i) os << (i ? "," : "") << c.coeffs()[i];
  return os << "]";
}

RootSum::RootSum(int order) : order_(order), buckets_(static_cast<size_t>(order)) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
}

void RootSum::add(long long j, const Rational& r) {
  long long e = order_;
  buckets_[static_cast<size_t>(((j % e) + e) % e)] += r;
}

void RootSum::add(long long j, const Cyclotomic& v) {
  if (order_ % v.order() != 0) throw std::invalid_argument("RootSum: value order must divide accumulator order");
  long long e = order_;
  long long stride = order_ / v.order();
  auto c = v.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    long long pos = ((static_cast<long long>(i) * stride + j) % e + e) % e;
    buckets_[static_cast<size_t>(pos)] += c[i];
  }
}

void RootSum::add(long long j, const Cyclotomic& v, const Rational& scale) {
  if (scale.is_zero()) return;
  if (order_ % v.order() != 0) throw std::invalid_argument("RootSum: value order must divide accumulator order");
  long long e = order_;
  long long stride = order_ / v.order();
  auto c = v.coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    long long pos = ((static_cast<long long>(i) * stride + j) % e + e) % e;
    buckets_[static_cast<size_t>(pos)] += c[i] * scale;
  }
}

Cyclotomic RootSum::value() const { return Cyclotomic(order_, buckets_); }

}  // namespace dsum
