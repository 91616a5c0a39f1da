#pragma once

// Pointwise exact evaluation of combinatorial identities: a binomial-sum
// identity in a rational parameter x, Staver's identity, a WZ pair with its
// telescoped sum, and two floor-function inequalities.

#include <veritool/exact.hpp>

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace veritool {

/// Both sides of an identity, evaluated independently.
struct SidePair {
  ExactRational lhs;
  ExactRational rhs;

  [[nodiscard]] bool agree() const { return lhs == rhs; }
};

/// sum_{k=0}^{n} C(n,k)^2 C(x+k, 2n+1)  versus
/// (1 / ((4n+2) C(2n,n))) sum_{k=0}^{n} (2x - 3k) C(x,k)^2 C(2k,k).
inline SidePair lemma25_sides(std::uint64_t n, const ExactRational& x) {
  const auto ni = static_cast<std::int64_t>(n);
  ExactRational lhs;
  ExactRational rhs_sum;
  for (std::int64_t k = 0; k <= ni; ++k) {
    const ExactInt c = binomial(ni, k);
    lhs += ExactRational(c * c) * rational_binomial(x + ExactRational(k), 2 * n + 1);
    const ExactRational cx = rational_binomial(x, static_cast<std::uint64_t>(k));
    rhs_sum += (ExactRational(2) * x - ExactRational(3 * k)) * cx * cx * ExactRational(binomial(2 * k, k));
  }
  const ExactInt scale = ExactInt(4 * ni + 2) * binomial(2 * ni, ni);
  return {lhs, rhs_sum / ExactRational(scale)};
}

/// sum_{k=1}^{n} C(2k,k)/k  versus  ((n+1)/3) C(2n+1,n) sum_{k=1}^{n} 1/(k^2 C(n,k)^2).
inline SidePair staver_sides(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("staver_sides: n must be >= 1");
  const auto ni = static_cast<std::int64_t>(n);
  ExactRational lhs;
  ExactRational inner;
  for (std::int64_t k = 1; k <= ni; ++k) {
    lhs += ExactRational(binomial(2 * k, k), ExactInt(k));
    const ExactInt kc = ExactInt(k) * binomial(ni, k);
    inner += ExactRational(ExactInt(1), kc * kc);
  }
  const ExactRational rhs = ExactRational(ExactInt(ni + 1), ExactInt(3)) *
                            ExactRational(binomial(2 * ni + 1, ni)) * inner;
  return {lhs, rhs};
}

// WZ pair for sum (3k+1) C(2k,k)^3 / 16^k. Both functions come from their
// closed forms; neither is derived from the pair relation.

/// F(k,j) = ((3k+2j+1)/16^k) C(2k,k)^2 C(2k+2j,k+j) C(2k+2j,2j) / C(2j,j).
inline ExactRational wz_f(std::uint64_t k, std::uint64_t j) {
  const auto ki = static_cast<std::int64_t>(k);
  const auto ji = static_cast<std::int64_t>(j);
  const ExactInt c = binomial(2 * ki, ki);
  const ExactInt num = ExactInt(3 * ki + 2 * ji + 1) * c * c * binomial(2 * ki + 2 * ji, ki + ji) *
                       binomial(2 * ki + 2 * ji, 2 * ji);
  const ExactInt den = ExactInt::pow(ExactInt(16), k) * binomial(2 * ji, ji);
  return {num, den};
}

/// G(k,j) = -(2(2k-1)/16^{k-1}) C(2k-2,k-1)^2 C(2k+2j-2,k+j-1) C(2k+2j-2,2j) / C(2j,j),
/// and G(0,j) = 0.
inline ExactRational wz_g(std::uint64_t k, std::uint64_t j) {
  if (k == 0) return {};
  const auto ki = static_cast<std::int64_t>(k);
  const auto ji = static_cast<std::int64_t>(j);
  const ExactInt c = binomial(2 * ki - 2, ki - 1);
  const ExactInt num = ExactInt(-2 * (2 * ki - 1)) * c * c *
                       binomial(2 * ki + 2 * ji - 2, ki + ji - 1) *
                       binomial(2 * ki + 2 * ji - 2, 2 * ji);
  const ExactInt den = ExactInt::pow(ExactInt(16), k - 1) * binomial(2 * ji, ji);
  return {num, den};
}

struct WZPoint {
  std::uint64_t k;
  std::uint64_t j;
  ExactRational f_value;
  ExactRational g_value;
};

inline WZPoint wz_point(std::uint64_t k, std::uint64_t j) { return {k, j, wz_f(k, j), wz_g(k, j)}; }

/// F(k,j-1) - F(k,j) versus G(k+1,j) - G(k,j).
inline SidePair wz_relation_sides(std::uint64_t k, std::uint64_t j) {
  if (j < 1) throw std::invalid_argument("wz_pair_relation: j must be >= 1");
  return {wz_f(k, j - 1) - wz_f(k, j), wz_g(k + 1, j) - wz_g(k, j)};
}

/// The defect F(k,j-1) - F(k,j) - G(k+1,j) + G(k,j); zero for a WZ pair.
inline ExactRational wz_pair_relation(std::uint64_t k, std::uint64_t j) {
  const SidePair s = wz_relation_sides(k, j);
  return s.lhs - s.rhs;
}

/// sum_{k=0}^{N} (F(k,0) - F(k,N))  versus  sum_{j=1}^{N} G(N+1,j).
inline SidePair telescoped_sides(std::uint64_t big_n) {
  if (big_n < 1) throw std::invalid_argument("telescoped_identity_defect: N must be >= 1");
  ExactRational lhs;
  for (std::uint64_t k = 0; k <= big_n; ++k) lhs += wz_f(k, 0) - wz_f(k, big_n);
  ExactRational rhs;
  for (std::uint64_t j = 1; j <= big_n; ++j) rhs += wz_g(big_n + 1, j);
  return {lhs, rhs};
}

inline ExactRational telescoped_identity_defect(std::uint64_t big_n) {
  const SidePair s = telescoped_sides(big_n);
  return s.lhs - s.rhs;
}

/// (floor(2a/m)+floor(2b/m) >= floor(a/m)+floor(b/m)+floor((a+b)/m),
///  floor((a+b)/m) >= floor(a/m)+floor(b/m)).
inline std::pair<bool, bool> floor_superadditivity(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("floor_superadditivity: m must be >= 2");
  const bool doubled = (2 * a) / m + (2 * b) / m >= a / m + b / m + (a + b) / m;
  const bool additive = (a + b) / m >= a / m + b / m;
  return {doubled, additive};
}

}  // namespace veritool
