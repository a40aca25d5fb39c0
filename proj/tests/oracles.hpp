#pragma once

// Test-only oracles, kept independent of the construction paths they check:
// a directly coded three-term recurrence, a cofactor-expansion determinant,
// bitmask composition enumeration, an independently coded C_{n,m} sum, and
// high-precision constants.

#include <cstdint>
#include <random>
#include <vector>

#include "lagq/factorials.hpp"
#include "lagq/poly.hpp"
#include "lagq/rational.hpp"

namespace oracles {

using lagq::BigInt;
using lagq::Poly;
using lagq::Rational;

// ln(sqrt(pi)) and sqrt(pi) to well beyond double precision.
inline constexpr double kLnSqrtPi = 0.57236494292470008707171367567652935582;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518280;

// Classical generalized Laguerre sequence by the textbook three-term
// recurrence, coded directly.
inline std::vector<Poly> classical_three_term(const Rational& beta, int nmax) {
  std::vector<Poly> out;
  out.push_back(Poly{1});
  if (nmax >= 1) out.push_back(Poly{Rational(1) + beta, -1});
  for (int n = 2; n <= nmax; ++n) {
    Poly t = Poly{Rational(2 * n - 1) + beta, -1} * out[n - 1] -
             (Rational(n - 1) + beta) * out[n - 2];
    out.push_back(Rational(1, n) * t);
  }
  return out;
}

// Determinant by cofactor expansion along the first row. Exponential; fine
// for the size <= 6 matrices it is used on.
inline Poly naive_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly acc;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][col] * naive_det(minor);
    acc = col % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

// All compositions of n, enumerated through the bitmask of "cut here"
// decisions between adjacent units. Returns them grouped by part count.
inline std::vector<std::vector<std::vector<int>>> compositions_by_bitmask(int n) {
  std::vector<std::vector<std::vector<int>>> by_parts(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    by_parts[parts.size()].push_back(std::move(parts));
  }
  return by_parts;
}

// C_{n,m} recomputed with independent building blocks: additive Pascal
// binomials and an explicit falling-factorial loop.
inline Rational coeff_c_brute(int alpha, const Rational& beta, int n, int m) {
  std::vector<std::vector<BigInt>> pascal(static_cast<std::size_t>(m) + 1);
  for (int r = 0; r <= m; ++r) {
    pascal[r].assign(static_cast<std::size_t>(r) + 1, 1);
    for (int c = 1; c < r; ++c) pascal[r][c] = pascal[r - 1][c - 1] + pascal[r - 1][c];
  }
  Rational sum = 0;
  for (int j = 0; j <= m; ++j) {
    Rational falling = 1;
    for (int i = 0; i < alpha; ++i)
      falling *= Rational(static_cast<long long>(alpha) * (n - j) - i) + beta;
    Rational term = Rational(pascal[m][j]) * Rational(n - j) * falling;
    sum += j % 2 == 0 ? term : -term;
  }
  BigInt mfact = 1;
  for (int i = 2; i <= m; ++i) mfact *= i;
  return sum / Rational(mfact * n);
}

// Deterministic generators for property tests.
inline Rational random_rational(std::mt19937& rng, int max_abs_num = 50, int max_den = 50) {
  std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937& rng, int max_degree = 8) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  const int d = deg(rng);
  std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
  for (auto& c : coeffs) c = random_rational(rng);
  return Poly(std::move(coeffs));
}

}  // namespace oracles
