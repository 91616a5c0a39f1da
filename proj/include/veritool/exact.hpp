#pragma once

// Exact integer and rational arithmetic plus the combinatorial primitives the
// verifiers are built on (factorials, binomials, p-adic valuations).

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace veritool {

/// Arbitrary-precision signed integer.
///
/// Value wrapper around GMP's mpz_class. All arithmetic is exact; division
/// truncates toward zero like the built-in integer types and throws on a zero
/// divisor.
class ExactInt {
 public:
  ExactInt() = default;
  template <std::signed_integral T>
  ExactInt(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral T>
  ExactInt(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit ExactInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses "-?[0-9]+". Anything else (including "+1", blanks) throws
  /// std::invalid_argument.
  static ExactInt parse(std::string_view text) {
    std::size_t i = 0;
    if (!text.empty() && text[0] == '-') i = 1;
    if (i == text.size()) throw std::invalid_argument("ExactInt: empty digit string");
    for (std::size_t j = i; j < text.size(); ++j) {
      if (text[j] < '0' || text[j] > '9') {
        throw std::invalid_argument("ExactInt: bad decimal literal '" + std::string(text) + "'");
      }
    }
    return ExactInt(mpz_class(std::string(text), 10));
  }

  [[nodiscard]] std::string str() const { return v_.get_str(10); }

  [[nodiscard]] int sign() const { return sgn(v_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_odd() const { return mpz_odd_p(v_.get_mpz_t()) != 0; }
  [[nodiscard]] bool is_even() const { return !is_odd(); }
  [[nodiscard]] std::size_t bit_length() const { return mpz_sizeinbase(v_.get_mpz_t(), 2); }

  [[nodiscard]] bool fits_int64() const { return v_.fits_slong_p(); }
  [[nodiscard]] std::int64_t to_int64() const {
    if (!fits_int64()) throw std::overflow_error("ExactInt: value does not fit in int64");
    return v_.get_si();
  }

  [[nodiscard]] ExactInt abs() const { return ExactInt(mpz_class(::abs(v_))); }

  /// True when `d` divides this value exactly. `d` must be nonzero.
  [[nodiscard]] bool divisible_by(const ExactInt& d) const {
    if (d.is_zero()) throw std::domain_error("ExactInt: divisibility by zero");
    return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
  }

  /// Quotient for a division known to be exact; throws if it is not.
  [[nodiscard]] ExactInt divexact(const ExactInt& d) const {
    if (!divisible_by(d)) throw std::domain_error("ExactInt: inexact division");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), v_.get_mpz_t(), d.v_.get_mpz_t());
    return ExactInt(std::move(q));
  }

  /// Least nonnegative residue modulo a positive `m`.
  [[nodiscard]] ExactInt mod_floor(const ExactInt& m) const {
    if (m.sign() <= 0) throw std::domain_error("ExactInt: modulus must be positive");
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v_.get_mpz_t(), m.v_.get_mpz_t());
    return ExactInt(std::move(r));
  }

  static ExactInt pow(const ExactInt& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.v_.get_mpz_t(), exp);
    return ExactInt(std::move(r));
  }

  static ExactInt gcd(const ExactInt& a, const ExactInt& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return ExactInt(std::move(r));
  }

  [[nodiscard]] const mpz_class& mpz() const { return v_; }

  ExactInt operator-() const { return ExactInt(mpz_class(-v_)); }

  ExactInt& operator+=(const ExactInt& o) { v_ += o.v_; return *this; }
  ExactInt& operator-=(const ExactInt& o) { v_ -= o.v_; return *this; }
  ExactInt& operator*=(const ExactInt& o) { v_ *= o.v_; return *this; }
  ExactInt& operator/=(const ExactInt& o) {
    if (o.is_zero()) throw std::domain_error("ExactInt: division by zero");
    v_ /= o.v_;
    return *this;
  }
  ExactInt& operator%=(const ExactInt& o) {
    if (o.is_zero()) throw std::domain_error("ExactInt: division by zero");
    v_ %= o.v_;
    return *this;
  }

  friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
  friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
  friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }
  friend ExactInt operator/(ExactInt a, const ExactInt& b) { return a /= b; }
  friend ExactInt operator%(ExactInt a, const ExactInt& b) { return a %= b; }

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactInt& x) { return os << x.str(); }

 private:
  mpz_class v_{0};
};

/// Canonical exact fraction: positive denominator, lowest terms, zero is 0/1.
class ExactRational {
 public:
  ExactRational() = default;
  template <std::integral T>
  ExactRational(T v) : q_(ExactInt(v).mpz()) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const ExactInt& v) : q_(v.mpz()) {}  // NOLINT(google-explicit-constructor)
  ExactRational(const ExactInt& num, const ExactInt& den) {
    if (den.is_zero()) throw std::domain_error("ExactRational: zero denominator");
    q_ = mpq_class(num.mpz(), den.mpz());
    q_.canonicalize();
  }

  /// Parses "num" or "num/den" with decimal integer parts; the result is
  /// canonicalized, so "2/4" reads as 1/2.
  static ExactRational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExactRational(ExactInt::parse(text));
    const ExactInt den = ExactInt::parse(text.substr(slash + 1));
    return ExactRational(ExactInt::parse(text.substr(0, slash)), den);
  }

  /// "num/den", or just "num" when the denominator is 1.
  [[nodiscard]] std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  [[nodiscard]] ExactInt numerator() const { return ExactInt(mpz_class(q_.get_num())); }
  [[nodiscard]] ExactInt denominator() const { return ExactInt(mpz_class(q_.get_den())); }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }

  [[nodiscard]] const mpq_class& mpq() const { return q_; }

  ExactRational operator-() const {
    ExactRational r;
    r.q_ = -q_;
    return r;
  }

  ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
  ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
  ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
  ExactRational& operator/=(const ExactRational& o) {
    if (o.is_zero()) throw std::domain_error("ExactRational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const ExactRational& x) { return os << x.str(); }

 private:
  mpq_class q_{0};
};

// Trial division; adequate for the desk-scale primes used here (p < 10^6 or so).
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

namespace detail {
inline void require_prime(std::uint64_t p, const char* who) {
  if (!is_prime(p)) {
    throw std::invalid_argument(std::string(who) + ": " + std::to_string(p) + " is not prime");
  }
}
}  // namespace detail

inline ExactInt factorial(std::uint64_t n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return ExactInt(std::move(r));
}

/// n!! with (-1)!! = 0!! = 1.
inline ExactInt double_factorial(std::int64_t n) {
  if (n < -1) throw std::invalid_argument("double_factorial: n must be >= -1");
  if (n <= 0) return ExactInt(1);
  mpz_class r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return ExactInt(std::move(r));
}

/// C(n, k) for any integer n. Zero when k < 0, or when n >= 0 and k > n.
/// Negative n uses the falling factorial n(n-1)...(n-k+1)/k!.
inline ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) return ExactInt(0);
  if (n >= 0 && k > n) return ExactInt(0);
  mpz_class r;
  const mpz_class top(static_cast<long>(n));
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return ExactInt(std::move(r));
}

/// x(x-1)...(x-k+1)/k! for rational x.
inline ExactRational rational_binomial(const ExactRational& x, std::uint64_t k) {
  // With x = a/b the product is prod(a - i*b) / (b^k * k!); one normalization at the end.
  const ExactInt a = x.numerator();
  const ExactInt b = x.denominator();
  ExactInt num(1);
  ExactInt step = a;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= step;
    step -= b;
  }
  return ExactRational(num, ExactInt::pow(b, k) * factorial(k));
}

/// ord_p(n!) by Legendre's formula, summing floor(n / p^i) while p^i <= n.
inline std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p) {
  detail::require_prime(p, "legendre_valuation");
  std::uint64_t total = 0;
  for (std::uint64_t q = n / p; q > 0; q /= p) total += q;
  return total;
}

/// Number of carries when adding m and n in base p (Kummer).
inline std::uint64_t kummer_carries(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  detail::require_prime(p, "kummer_carries");
  std::uint64_t carries = 0;
  std::uint64_t carry = 0;
  while (m > 0 || n > 0 || carry > 0) {
    const std::uint64_t digit_sum = m % p + n % p + carry;
    carry = digit_sum >= p ? 1 : 0;
    carries += carry;
    m /= p;
    n /= p;
  }
  return carries;
}

/// ord_p(x) for nonzero integer x.
inline std::uint64_t valuation(const ExactInt& x, std::uint64_t p) {
  detail::require_prime(p, "valuation");
  if (x.is_zero()) throw std::domain_error("valuation: ord_p(0) is infinite");
  mpz_class rest;
  const mpz_class prime(static_cast<unsigned long>(p));
  return mpz_remove(rest.get_mpz_t(), x.mpz().get_mpz_t(), prime.get_mpz_t());
}

/// ord_p of a nonzero rational (may be negative).
inline std::int64_t valuation(const ExactRational& x, std::uint64_t p) {
  if (x.is_zero()) throw std::domain_error("valuation: ord_p(0) is infinite");
  return static_cast<std::int64_t>(valuation(x.numerator(), p)) -
         static_cast<std::int64_t>(valuation(x.denominator(), p));
}

}  // namespace veritool
