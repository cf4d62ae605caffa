#include "tauhh/scalar.hpp"

#include <ostream>
#include <stdexcept>

#include "tauhh/errors.hpp"

namespace tauhh {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element is not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not a supported prime");
  }
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long value) const {
  if (is_rational()) return Scalar::rational(mpq_class(mpz_class(std::to_string(value))));
  long long r = value % static_cast<long long>(modulus_);
  if (r < 0) r += modulus_;
  return Scalar::modular(static_cast<std::uint64_t>(r), modulus_);
}

Scalar Field::from_integer(const mpz_class& value) const {
  if (is_rational()) return Scalar::rational(mpq_class(value));
  mpz_class r = value % modulus_;
  if (r < 0) r += modulus_;
  return Scalar::modular(r.get_ui(), modulus_);
}

Scalar Field::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  if (is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar::rational(q);
  }
  Scalar d = from_integer(den);
  if (d.is_zero()) throw std::domain_error("denominator vanishes modulo p");
  return from_integer(num) / d;
}

std::string Field::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(modulus_) + ")";
}

Scalar Scalar::rational(mpq_class q) {
  q.canonicalize();
  Scalar s;
  s.value_ = std::move(q);
  return s;
}

Scalar Scalar::modular(std::uint64_t residue, std::uint32_t modulus) {
  Scalar s;
  s.value_ = Residue{static_cast<std::uint32_t>(residue % modulus), modulus};
  return s;
}

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field::prime(std::get<Residue>(value_).modulus);
}

bool Scalar::is_zero() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

const mpq_class& Scalar::rational_value() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return *q;
  throw InternalError("rational value requested from a prime-field scalar");
}

std::uint32_t Scalar::residue() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->value;
  throw InternalError("residue requested from a rational scalar");
}

std::uint32_t Scalar::modulus() const {
  if (auto r = std::get_if<Residue>(&value_)) return r->modulus;
  return 0;
}

const Scalar::Residue& Scalar::residue_checked(const Scalar& other) const {
  auto mine = std::get_if<Residue>(&value_);
  auto theirs = std::get_if<Residue>(&other.value_);
  if (!mine || !theirs || mine->modulus != theirs->modulus) {
    throw InternalError("arithmetic mixes scalars from different fields");
  }
  return *theirs;
}

Scalar Scalar::operator-() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return rational(-*q);
  const auto& r = std::get<Residue>(value_);
  return modular(r.value == 0 ? 0 : r.modulus - r.value, r.modulus);
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (auto q = std::get_if<mpq_class>(&value_)) {
    if (!rhs.is_rational()) throw InternalError("arithmetic mixes scalars from different fields");
    *q += std::get<mpq_class>(rhs.value_);
    return *this;
  }
  const Residue& o = residue_checked(rhs);
  auto& r = std::get<Residue>(value_);
  r.value = static_cast<std::uint32_t>((std::uint64_t{r.value} + o.value) % r.modulus);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (auto q = std::get_if<mpq_class>(&value_)) {
    if (!rhs.is_rational()) throw InternalError("arithmetic mixes scalars from different fields");
    *q *= std::get<mpq_class>(rhs.value_);
    return *this;
  }
  const Residue& o = residue_checked(rhs);
  auto& r = std::get<Residue>(value_);
  r.value = static_cast<std::uint32_t>((std::uint64_t{r.value} * o.value) % r.modulus);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (auto q = std::get_if<mpq_class>(&value_)) return rational(1 / *q);
  const auto& r = std::get<Residue>(value_);
  return modular(inverse_mod(r.value, r.modulus), r.modulus);
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.is_rational() != rhs.is_rational()) return false;
  if (lhs.is_rational()) {
    return std::get<mpq_class>(lhs.value_) == std::get<mpq_class>(rhs.value_);
  }
  const auto& a = std::get<Scalar::Residue>(lhs.value_);
  const auto& b = std::get<Scalar::Residue>(rhs.value_);
  return a.modulus == b.modulus && a.value == b.value;
}

std::string Scalar::to_string() const {
  if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace tauhh
