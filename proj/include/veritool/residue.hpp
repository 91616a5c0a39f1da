#pragma once

#include <veritool/exact.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace veritool {

class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DenominatorNotCoprime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ModulusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The modulus p^e for a prime p and e >= 1. Primality is checked on construction.
class PrimePowerModulus {
 public:
  PrimePowerModulus(std::uint64_t p, unsigned e) : p_(p), e_(e) {
    detail::require_prime(p, "PrimePowerModulus");
    if (e == 0) throw std::invalid_argument("PrimePowerModulus: exponent must be >= 1");
    value_ = ExactInt::pow(ExactInt(p), e);
  }

  [[nodiscard]] std::uint64_t prime() const { return p_; }
  [[nodiscard]] unsigned exponent() const { return e_; }
  [[nodiscard]] const ExactInt& value() const { return value_; }

  /// "p^e", e.g. "5^4".
  [[nodiscard]] std::string str() const { return std::to_string(p_) + "^" + std::to_string(e_); }

  friend bool operator==(const PrimePowerModulus& a, const PrimePowerModulus& b) {
    return a.p_ == b.p_ && a.e_ == b.e_;
  }

 private:
  std::uint64_t p_;
  unsigned e_;
  ExactInt value_;
};

/// An element of Z/p^e, held as its least nonnegative representative.
class Residue {
 public:
  Residue(const ExactInt& v, PrimePowerModulus m) : modulus_(std::move(m)) {
    value_ = v.mod_floor(modulus_.value());
  }

  [[nodiscard]] const ExactInt& value() const { return value_; }
  [[nodiscard]] const PrimePowerModulus& modulus() const { return modulus_; }
  [[nodiscard]] std::string str() const { return value_.str(); }

  [[nodiscard]] bool is_unit() const {
    return !value_.divisible_by(ExactInt(modulus_.prime()));
  }

  [[nodiscard]] Residue pow(std::uint64_t k) const {
    mpz_class r;
    const mpz_class exp(static_cast<unsigned long>(k));
    mpz_powm(r.get_mpz_t(), value_.mpz().get_mpz_t(), exp.get_mpz_t(),
             modulus_.value().mpz().get_mpz_t());
    return {ExactInt(std::move(r)), modulus_};
  }

  [[nodiscard]] Residue inverse() const {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), value_.mpz().get_mpz_t(), modulus_.value().mpz().get_mpz_t()) == 0) {
      throw NotInvertible(value_.str() + " is not invertible mod " + modulus_.str());
    }
    return {ExactInt(std::move(r)), modulus_};
  }

  Residue operator-() const { return {-value_, modulus_}; }

  friend Residue operator+(const Residue& a, const Residue& b) {
    check_same(a, b);
    return {a.value_ + b.value_, a.modulus_};
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    check_same(a, b);
    return {a.value_ - b.value_, a.modulus_};
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    check_same(a, b);
    return {a.value_ * b.value_, a.modulus_};
  }
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }

  friend bool operator==(const Residue& a, const Residue& b) {
    check_same(a, b);
    return a.value_ == b.value_;
  }

 private:
  static void check_same(const Residue& a, const Residue& b) {
    if (!(a.modulus_ == b.modulus_)) {
      throw ModulusMismatch("residues mod " + a.modulus_.str() + " and " + b.modulus_.str());
    }
  }

  ExactInt value_;
  PrimePowerModulus modulus_;
};

/// a^{-1} mod p^e by the extended Euclidean algorithm.
inline Residue mod_inverse(const ExactInt& a, const PrimePowerModulus& m) {
  ExactInt r0 = m.value();
  ExactInt r1 = a.mod_floor(m.value());
  ExactInt s0(0);
  ExactInt s1(1);
  while (!r1.is_zero()) {
    const ExactInt q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    s0 = std::exchange(s1, s0 - q * s1);
  }
  if (r0 != ExactInt(1)) {
    throw NotInvertible(a.str() + " is not invertible mod " + m.str());
  }
  return {s0, m};
}

/// numerator * denominator^{-1} mod p^e.
inline Residue reduce_rational(const ExactRational& q, const PrimePowerModulus& m) {
  const ExactInt den = q.denominator();
  if (den.divisible_by(ExactInt(m.prime()))) {
    throw DenominatorNotCoprime(q.str() + " has denominator divisible by " +
                                std::to_string(m.prime()));
  }
  return Residue(q.numerator(), m) * mod_inverse(den, m);
}

inline Residue pow_mod(const ExactInt& a, std::uint64_t k, const PrimePowerModulus& m) {
  return Residue(a, m).pow(k);
}

/// (a/p) for an odd prime p, by Euler's criterion.
inline int legendre_symbol(const ExactInt& a, std::uint64_t p) {
  detail::require_prime(p, "legendre_symbol");
  if (p == 2) throw std::invalid_argument("legendre_symbol: p must be odd");
  const PrimePowerModulus mod_p(p, 1);
  const Residue r = pow_mod(a, (p - 1) / 2, mod_p);
  if (r.value().is_zero()) return 0;
  return r.value() == ExactInt(1) ? 1 : -1;
}

}  // namespace veritool
