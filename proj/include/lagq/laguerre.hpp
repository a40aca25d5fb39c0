#pragma once

// Direct constructors for the generalized Laguerre polynomials
// L_{floor(n/q)}^{(alpha,beta)}(z): the defining series and the closed form,
// plus the classical alpha = 1, q = 1 specialization L_n^{(beta)}(z).
//
// Defining series, coefficient of z^k for k = 0..floor(n/q):
//
//     Gamma(alpha n + beta + 1)        (-n)^(qk)
//     --------------------------- * ----------------------------
//          Gamma(n + 1)             Gamma(alpha k + beta + 1) k!
//
// with (-n)^(qk) the rising factorial. On the exact path every Gamma ratio
// is a finite product (alpha is a positive integer, beta rational > -1), so
// all coefficients are exact rationals.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lagq/factorials.hpp"
#include "lagq/poly.hpp"
#include "lagq/rational.hpp"

namespace lagq {

// Requested operation needs q = 1 (recurrence, determinant, composition).
struct unsupported_parameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Method { series, closed, recurrence, determinant, composition };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::series: return "series";
    case Method::closed: return "closed";
    case Method::recurrence: return "recurrence";
    case Method::determinant: return "determinant";
    case Method::composition: return "composition";
  }
  return "?";
}

inline Method method_from_string(std::string_view s) {
  if (s == "series") return Method::series;
  if (s == "closed") return Method::closed;
  if (s == "recurrence") return Method::recurrence;
  if (s == "determinant") return Method::determinant;
  if (s == "composition") return Method::composition;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

// Parameter triple (alpha, beta, q). Construction is the single validation
// gate: alpha >= 1, q >= 1, beta > -1. Everything downstream assumes a valid
// Params and never re-checks.
class Params {
 public:
  Params(int alpha, Rational beta, int q = 1)
      : alpha_(alpha), beta_(std::move(beta)), q_(q) {
    if (alpha_ < 1) throw std::domain_error("Params: alpha must be a positive integer");
    if (q_ < 1) throw std::domain_error("Params: q must be a positive integer");
    if (!(beta_ > Rational(-1))) throw std::domain_error("Params: beta must exceed -1");
  }

  int alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  int q() const { return q_; }

 private:
  int alpha_;
  Rational beta_;
  int q_;
};

struct LaguerreResult {
  Params params;
  int n = 0;
  Poly poly;
  Method method = Method::series;
};

// Degree of L_{floor(n/q)}: exactly floor(n/q) for beta > -1.
inline int laguerre_degree(const Params& params, int n) {
  if (n < 0) throw std::domain_error("laguerre_degree: n must be nonnegative");
  return n / params.q();
}

// Coefficient of z^k in the defining series,
//   gamma_ratio(beta, alpha, n, k) * (-n)^(qk) / (n! k!).
// Nonzero for every k in range: the rising factorial is a product of qk
// strictly negative integers, and each gamma_ratio factor is positive.
inline Rational series_coefficient(const Params& params, int n, int k) {
  if (n < 0) throw std::domain_error("series_coefficient: n must be nonnegative");
  if (k < 0 || k > laguerre_degree(params, n))
    throw std::out_of_range("series_coefficient: k outside [0, floor(n/q)]");
  Rational r = gamma_ratio(params.beta(), params.alpha(), n, k);
  r *= rising_factorial(Rational(-n), params.q() * k);
  return r / Rational(factorial(n) * factorial(k));
}

inline LaguerreResult laguerre_series(const Params& params, int n) {
  const int d = laguerre_degree(params, n);
  std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) coeffs[static_cast<std::size_t>(k)] = series_coefficient(params, n, k);
  return {params, n, Poly(std::move(coeffs)), Method::series};
}

// Closed form, coefficient of z^j for j = 0..floor(n/q):
//
//   (-1)^(qj) C(alpha n + beta, alpha (n-j)) (alpha (n-j))! / ((n-qj)! j!)
//
// where C is the generalized binomial. The sign is (-1)^(qj), matching the
// defining series: the rising factorial (-n)^(qj) contributes one minus sign
// per factor. For odd q this is the familiar (-1)^j.
inline LaguerreResult laguerre_closed(const Params& params, int n) {
  if (n < 0) throw std::domain_error("laguerre_closed: n must be nonnegative");
  const int d = laguerre_degree(params, n);
  const int alpha = params.alpha();
  const int q = params.q();
  const Rational top = Rational(static_cast<long long>(alpha) * n) + params.beta();
  std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) {
    Rational c = gen_binomial(top, alpha * (n - j));
    c *= Rational(factorial(alpha * (n - j)));
    c /= Rational(factorial(n - q * j) * factorial(j));
    coeffs[static_cast<std::size_t>(j)] = (q * j) % 2 == 0 ? c : -c;
  }
  return {params, n, Poly(std::move(coeffs)), Method::closed};
}

// Classical generalized Laguerre polynomial
//   L_n^{(beta)}(z) = sum_j (-1)^j C(n + beta, n - j) z^j / j!,
// identical to laguerre_closed with alpha = 1, q = 1.
inline LaguerreResult laguerre_classical(const Rational& beta, int n) {
  Params params(1, beta, 1);
  if (n < 0) throw std::domain_error("laguerre_classical: n must be nonnegative");
  const Rational top = Rational(n) + beta;
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Rational c = gen_binomial(top, n - j) / Rational(factorial(j));
    coeffs[static_cast<std::size_t>(j)] = j % 2 == 0 ? c : -c;
  }
  return {params, n, Poly(std::move(coeffs)), Method::closed};
}

}  // namespace lagq
