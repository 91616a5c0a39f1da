#pragma once

#include <veritool/exact.hpp>
#include <veritool/residue.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace veritool {

/// Euler (secant) numbers E_0, E_2, ..., E_max_index, defined by E_0 = 1 and
/// sum_{j=0}^{n} C(2n, 2j) E_{2j} = 0 for n >= 1. Odd-index values are zero
/// and not stored.
class EulerTable {
 public:
  EulerTable(std::uint64_t max_index, std::vector<ExactInt> even_values)
      : max_index_(max_index), values_(std::move(even_values)) {}

  [[nodiscard]] std::uint64_t max_index() const { return max_index_; }

  /// E_index; zero for odd index.
  [[nodiscard]] ExactInt at(std::uint64_t index) const {
    if (index > max_index_) throw std::out_of_range("EulerTable: index beyond table");
    if (index % 2 == 1) return ExactInt(0);
    return values_[index / 2];
  }

  [[nodiscard]] const std::vector<ExactInt>& even_values() const { return values_; }

 private:
  std::uint64_t max_index_;
  std::vector<ExactInt> values_;
};

inline EulerTable euler_numbers(std::uint64_t max_index) {
  if (max_index % 2 != 0) throw std::invalid_argument("euler_numbers: max_index must be even");
  const std::uint64_t count = max_index / 2 + 1;
  std::vector<ExactInt> e;
  e.reserve(count);
  e.emplace_back(1);
  for (std::uint64_t n = 1; n < count; ++n) {
    // C(2n, 2j) for consecutive j via C(2n, 2j+2) = C(2n, 2j) (2n-2j)(2n-2j-1) / ((2j+1)(2j+2)).
    ExactInt acc(0);
    ExactInt c(1);
    for (std::uint64_t j = 0; j < n; ++j) {
      acc += c * e[j];
      const std::uint64_t top = 2 * n - 2 * j;
      c = (c * ExactInt(top) * ExactInt(top - 1)).divexact(ExactInt((2 * j + 1) * (2 * j + 2)));
    }
    e.push_back(-acc);
  }
  return {max_index, std::move(e)};
}

/// E_index mod p, running the defining recurrence in single-word arithmetic
/// over a Pascal row kept mod p.
inline Residue euler_mod_p(std::uint64_t index, std::uint64_t p) {
  const PrimePowerModulus mod_p(p, 1);
  if (index % 2 == 1) return {ExactInt(0), mod_p};
  if (p > (std::uint64_t{1} << 31)) throw std::invalid_argument("euler_mod_p: p too large");

  std::vector<std::uint64_t> row{1 % p};  // C(m, .) mod p
  std::vector<std::uint64_t> euler{1 % p};  // E_0, E_2, ... mod p
  for (std::uint64_t m = 1; m <= index; ++m) {
    row.push_back(0);
    for (std::uint64_t i = m; i > 0; --i) row[i] = (row[i] + row[i - 1]) % p;
    if (m % 2 == 0) {
      std::uint64_t acc = 0;
      for (std::uint64_t j = 0; j < m / 2; ++j) acc = (acc + row[2 * j] * euler[j]) % p;
      euler.push_back((p - acc) % p);
    }
  }
  return {ExactInt(euler.back()), mod_p};
}

/// H_n = 1 + 1/2 + ... + 1/n; H_0 = 0.
inline ExactRational harmonic(std::uint64_t n) {
  // Accumulate sum_{k<=n} n!/k over n! and normalize once.
  ExactInt num(0);
  ExactInt den(1);
  for (std::uint64_t k = 1; k <= n; ++k) {
    num = num * ExactInt(k) + den;
    den *= ExactInt(k);
  }
  return {num, den};
}

/// Primes in [lo, hi], ascending (sieve of Eratosthenes).
inline std::vector<std::uint64_t> primes_in(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("primes_in: lo > hi");
  std::vector<std::uint64_t> out;
  if (hi < 2) return out;
  const auto top = static_cast<std::uint64_t>(hi);
  std::vector<bool> composite(top + 1, false);
  for (std::uint64_t i = 2; i * i <= top; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= top; j += i) composite[j] = true;
  }
  for (std::uint64_t i = lo < 2 ? 2 : static_cast<std::uint64_t>(lo); i <= top; ++i) {
    if (!composite[i]) out.push_back(i);
  }
  return out;
}

}  // namespace veritool
