#pragma once

// Factorial-type primitives over Rational: rising and falling factorials,
// Gamma-function ratios as finite products, and the generalized binomial
// coefficient. Everything here is exact; the Gamma function itself is never
// evaluated on this path.

#include <stdexcept>

#include "lagq/rational.hpp"

namespace lagq {

inline BigInt factorial(int n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Integer binomial coefficient; zero outside the triangle.
inline BigInt binomial_int(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is a binomial coefficient at every step
  }
  return r;
}

// Rising factorial x(x+1)...(x+k-1); empty product for k = 0.
inline Rational rising_factorial(const Rational& x, int k) {
  if (k < 0) throw std::domain_error("rising_factorial: negative length");
  Rational r = 1;
  Rational f = x;
  for (int i = 0; i < k; ++i, f += 1) r *= f;
  return r;
}

// Falling factorial x(x-1)...(x-k+1); empty product for k = 0.
inline Rational falling_factorial(const Rational& x, int k) {
  if (k < 0) throw std::domain_error("falling_factorial: negative length");
  Rational r = 1;
  Rational f = x;
  for (int i = 0; i < k; ++i, f -= 1) r *= f;
  return r;
}

// Gamma(alpha*hi + beta + 1) / Gamma(alpha*lo + beta + 1) as the finite
// product of (beta + 1 + j) for j in [alpha*lo, alpha*hi). Exact for any
// rational beta because alpha is a positive integer; every factor is
// strictly positive when beta > -1.
inline Rational gamma_ratio(const Rational& beta, int alpha, int hi, int lo) {
  if (alpha < 1) throw std::domain_error("gamma_ratio: alpha must be a positive integer");
  if (lo < 0 || hi < lo) throw std::domain_error("gamma_ratio: requires hi >= lo >= 0");
  Rational r = 1;
  Rational f = beta + Rational(1 + static_cast<long long>(alpha) * lo);
  for (long long j = static_cast<long long>(alpha) * lo; j < static_cast<long long>(alpha) * hi;
       ++j, f += 1)
    r *= f;
  return r;
}

// Generalized binomial coefficient: falling_factorial(x, k) / k!.
// Agrees with the integer binomial when x is an integer >= k >= 0.
inline Rational gen_binomial(const Rational& x, int k) {
  if (k < 0) throw std::domain_error("gen_binomial: negative lower index");
  return falling_factorial(x, k) / Rational(factorial(k));
}

}  // namespace lagq
