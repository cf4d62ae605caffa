#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <iosfwd>
#include <string>
#include <variant>

namespace tauhh {

class Scalar;

/// Ground field: the rationals or a prime field GF(p) with p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws std::invalid_argument when p is not a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_rational() const { return modulus_ == 0; }
  /// 0 for Q, otherwise p.
  std::uint32_t characteristic() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long value) const;
  Scalar from_integer(const mpz_class& value) const;
  /// Throws std::domain_error on a zero denominator or one divisible by p.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// An exact field element. Rationals are kept reduced with a positive
/// denominator; residues lie in [0, p). Arithmetic between elements of
/// different fields raises InternalError.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}

  static Scalar rational(mpq_class q);
  static Scalar modular(std::uint64_t residue, std::uint32_t modulus);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational_value() const;
  std::uint32_t residue() const;
  std::uint32_t modulus() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& rhs);
  Scalar inverse() const;

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend bool operator!=(const Scalar& lhs, const Scalar& rhs) {
    return !(lhs == rhs);
  }

  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };

  const Residue& residue_checked(const Scalar& other) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

}  // namespace tauhh
