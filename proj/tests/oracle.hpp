#pragma once

// Test-only reference computations. These deliberately avoid the library's
// combinatorial routines (no GMP factorial/binomial calls, no recurrences the
// library uses) so they can serve as independent oracles.

#include <veritool/exact.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using veritool::ExactInt;
using veritool::ExactRational;

inline ExactInt factorial(std::uint64_t n) {
  ExactInt r(1);
  for (std::uint64_t i = 2; i <= n; ++i) r = r * ExactInt(i);
  return r;
}

inline ExactInt double_factorial(std::int64_t n) {
  ExactInt r(1);
  for (std::int64_t i = n; i > 1; i -= 2) r = r * ExactInt(i);
  return r;
}

/// Row n of Pascal's triangle by repeated addition.
inline std::vector<ExactInt> pascal_row(std::uint64_t n) {
  std::vector<ExactInt> row{ExactInt(1)};
  for (std::uint64_t m = 1; m <= n; ++m) {
    std::vector<ExactInt> next(m + 1, ExactInt(1));
    for (std::uint64_t i = 1; i < m; ++i) next[i] = row[i - 1] + row[i];
    row = std::move(next);
  }
  return row;
}

inline ExactInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return ExactInt(0);
  return pascal_row(n)[k];
}

/// C(2k,k) via factorials.
inline ExactInt central(std::uint64_t k) { return factorial(2 * k) / (factorial(k) * factorial(k)); }

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// ord_p(x) by repeated division.
inline std::uint64_t ord(ExactInt x, std::uint64_t p) {
  std::uint64_t v = 0;
  const ExactInt pp(p);
  while (!x.is_zero() && (x % pp).is_zero()) {
    x = x / pp;
    ++v;
  }
  return v;
}

/// Smallest r in [0, m) with a*r == 1 (mod m), by search; -1 if none.
inline std::int64_t brute_inverse(std::int64_t a, std::int64_t m) {
  const std::int64_t ar = ((a % m) + m) % m;
  for (std::int64_t r = 0; r < m; ++r) {
    if ((ar * r) % m == 1 % m) return r;
  }
  return -1;
}

/// Residue of a rational mod m by brute-force inverse of the (small-reduced) denominator.
inline std::int64_t reduce(const ExactRational& q, std::int64_t m) {
  const std::int64_t num = q.numerator().mod_floor(ExactInt(m)).to_int64();
  const std::int64_t den = q.denominator().mod_floor(ExactInt(m)).to_int64();
  const std::int64_t inv = brute_inverse(den, m);
  return static_cast<std::int64_t>((static_cast<__int128>(num) * inv) % m);
}

/// Signed secant numbers E_0, E_2, ... from the Seidel boustrophedon triangle
/// (which yields |E_2n|), with sign (-1)^n.
inline std::vector<ExactInt> secant_numbers(std::size_t count) {
  const std::size_t rows = 2 * count;
  std::vector<ExactInt> zigzag;  // Euler zigzag numbers A000111
  std::vector<ExactInt> row{ExactInt(1)};
  zigzag.push_back(ExactInt(1));
  for (std::size_t n = 1; n < rows; ++n) {
    std::vector<ExactInt> next(n + 1, ExactInt(0));
    if (n % 2 == 1) {
      for (std::size_t i = 1; i <= n; ++i) next[i] = next[i - 1] + row[i - 1];
      zigzag.push_back(next[n]);
    } else {
      for (std::size_t i = n; i-- > 0;) next[i] = next[i + 1] + row[i];
      zigzag.push_back(next[0]);
    }
    row = std::move(next);
  }
  std::vector<ExactInt> out;
  for (std::size_t n = 0; n < count; ++n) {
    const ExactInt& mag = zigzag[2 * n];
    out.push_back(n % 2 == 0 ? mag : -mag);
  }
  return out;
}

/// sum_{k=0}^{top} (a k + b) C(2k,k)^3 / base^k, term by term.
inline ExactRational weighted_series(int a, int b, unsigned base, std::uint64_t top) {
  ExactRational s;
  for (std::uint64_t k = 0; k <= top; ++k) {
    const ExactInt c = central(k);
    s = s + ExactRational(ExactInt(static_cast<std::int64_t>(a * static_cast<std::int64_t>(k) + b)) * c * c * c,
                          ExactInt::pow(ExactInt(base), k));
  }
  return s;
}

/// Random decimal string with up to `digits` digits and random sign.
inline std::string random_decimal(std::mt19937_64& rng, std::size_t digits) {
  std::uniform_int_distribution<std::size_t> len(1, digits);
  std::uniform_int_distribution<int> d(0, 9);
  const std::size_t n = len(rng);
  std::string s;
  s += static_cast<char>('1' + d(rng) % 9);
  for (std::size_t i = 1; i < n; ++i) s += static_cast<char>('0' + d(rng));
  if (rng() % 2) s.insert(s.begin(), '-');
  return s;
}

}  // namespace oracle
