#pragma once

// Single-word arithmetic mod p^e for sweeps where p^e < 2^63. Values that may
// carry factors of p are kept as (valuation, unit) pairs so nothing ever
// divides by p. Everything here must agree bit for bit with the ExactInt path.

#include <veritool/exact.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

namespace veritool::fast {

/// n = p^valuation * unit with p not dividing unit. The unit is kept reduced
/// mod p^e by the owning WordModulus.
struct PadicSplit {
  unsigned valuation = 0;
  std::uint64_t unit = 1;
};

class WordModulus {
 public:
  /// Empty when p is not prime, e == 0, or p^e does not fit below 2^63.
  static std::optional<WordModulus> make(std::uint64_t p, unsigned e) {
    if (!is_prime(p) || e == 0) return std::nullopt;
    unsigned __int128 m = 1;
    for (unsigned i = 0; i < e; ++i) {
      m *= p;
      if (m >= (static_cast<unsigned __int128>(1) << 63)) return std::nullopt;
    }
    return WordModulus(p, e, static_cast<std::uint64_t>(m));
  }

  [[nodiscard]] std::uint64_t prime() const { return p_; }
  [[nodiscard]] unsigned exponent() const { return e_; }
  [[nodiscard]] std::uint64_t value() const { return m_; }

  [[nodiscard]] std::uint64_t reduce(std::int64_t x) const {
    const std::int64_t r = x % static_cast<std::int64_t>(m_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m_) : r);
  }
  [[nodiscard]] std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;  // a, b < 2^63
    return s >= m_ ? s - m_ : s;
  }
  [[nodiscard]] std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + (m_ - b);
  }
  [[nodiscard]] std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m_);
  }
  [[nodiscard]] std::uint64_t pow(std::uint64_t a, std::uint64_t k) const {
    std::uint64_t result = 1 % m_;
    a %= m_;
    for (; k > 0; k >>= 1) {
      if (k & 1) result = mul(result, a);
      a = mul(a, a);
    }
    return result;
  }
  [[nodiscard]] std::uint64_t inverse(std::uint64_t a) const {
    std::int64_t r0 = static_cast<std::int64_t>(m_);
    std::int64_t r1 = static_cast<std::int64_t>(a % m_);
    std::int64_t s0 = 0;
    std::int64_t s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      r0 = std::exchange(r1, r0 - q * r1);
      s0 = std::exchange(s1, s0 - q * s1);
    }
    if (r0 != 1) throw std::domain_error("WordModulus: value not invertible");
    return reduce(s0);
  }

  /// Splits a positive integer into p^v * unit (unit reduced mod p^e).
  [[nodiscard]] PadicSplit split(std::uint64_t n) const {
    if (n == 0) throw std::domain_error("WordModulus: cannot split zero");
    PadicSplit s;
    while (n % p_ == 0) {
      n /= p_;
      ++s.valuation;
    }
    s.unit = n % m_;
    return s;
  }

  [[nodiscard]] PadicSplit mul(PadicSplit a, PadicSplit b) const {
    return {a.valuation + b.valuation, mul(a.unit, b.unit)};
  }
  [[nodiscard]] PadicSplit div(PadicSplit a, PadicSplit b) const {
    if (b.valuation > a.valuation) throw std::domain_error("WordModulus: quotient not p-integral");
    return {a.valuation - b.valuation, mul(a.unit, inverse(b.unit))};
  }

  /// The residue of p^v * unit; zero once v >= e.
  [[nodiscard]] std::uint64_t value_of(PadicSplit s) const {
    if (s.valuation >= e_) return 0;
    return mul(pow(p_, s.valuation), s.unit);
  }

 private:
  WordModulus(std::uint64_t p, unsigned e, std::uint64_t m) : p_(p), e_(e), m_(m) {}

  std::uint64_t p_;
  unsigned e_;
  std::uint64_t m_;
};

}  // namespace veritool::fast
