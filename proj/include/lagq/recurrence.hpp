#pragma once

// Full-history recurrence for L_n^{(alpha,beta)}(z) at q = 1, driven by the
// coefficient families
//
//   C_{n,m} = (1 / (m! n)) sum_{j=0}^{m} (-1)^j C(m,j) (n-j)
//                                  falling(alpha (n-j) + beta, alpha)
//   B_{n,m} = falling(alpha (n-1) + beta, (m-1) alpha) * C_{n,m}
//
// and the step, for n >= 3,
//
//   L_n = -(z/n) L_{n-1} + sum_{m=1}^{n} (-1)^{m-1} B_{n,m} L_{n-m}.
//
// For alpha = 1 only m = 1, 2 survive (C_{n,m} = 0 for m >= 3) and the step
// collapses to the classical three-term recurrence.

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lagq/factorials.hpp"
#include "lagq/laguerre.hpp"
#include "lagq/poly.hpp"

namespace lagq {

namespace detail {
inline void require_q1(const Params& params, const char* who) {
  if (params.q() != 1)
    throw unsupported_parameter(std::string(who) + ": requires q = 1");
}
}  // namespace detail

inline Rational coeff_c(const Params& params, int n, int m) {
  detail::require_q1(params, "coeff_c");
  if (n < 1 || m < 1 || m > n) throw std::out_of_range("coeff_c: requires 1 <= m <= n");
  const int alpha = params.alpha();
  Rational sum = 0;
  for (int j = 0; j <= m; ++j) {
    Rational term = Rational(binomial_int(m, j) * (n - j));
    term *= falling_factorial(Rational(static_cast<long long>(alpha) * (n - j)) + params.beta(),
                              alpha);
    sum += j % 2 == 0 ? term : -term;
  }
  return sum / Rational(factorial(m) * n);
}

inline Rational coeff_b(const Params& params, int n, int m) {
  detail::require_q1(params, "coeff_b");
  if (n < 1 || m < 1 || m > n) throw std::out_of_range("coeff_b: requires 1 <= m <= n");
  Rational prefix = falling_factorial(
      Rational(static_cast<long long>(params.alpha()) * (n - 1)) + params.beta(),
      (m - 1) * params.alpha());
  return prefix * coeff_c(params, n, m);
}

// Memoized access to C_{n,m} and B_{n,m}. The determinant and composition
// constructors request the same B values many times over. Writes are
// serialized internally, so a table may be shared across threads.
class CoeffTable {
 public:
  explicit CoeffTable(Params params) : params_(std::move(params)) {
    detail::require_q1(params_, "CoeffTable");
  }

  const Params& params() const { return params_; }

  Rational c(int n, int m) const { return lookup(c_, n, m, &coeff_c); }
  Rational b(int n, int m) const { return lookup(b_, n, m, &coeff_b); }

 private:
  using Key = std::pair<int, int>;
  using Fn = Rational (*)(const Params&, int, int);

  Rational lookup(std::map<Key, Rational>& cache, int n, int m, Fn compute) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = cache.find({n, m}); it != cache.end()) return it->second;
    }
    Rational value = compute(params_, n, m);
    std::lock_guard<std::mutex> lock(mu_);
    return cache.emplace(Key{n, m}, std::move(value)).first->second;
  }

  Params params_;
  mutable std::map<Key, Rational> c_;
  mutable std::map<Key, Rational> b_;
  mutable std::mutex mu_;
};

// L_0..L_nmax via the full-history recurrence. Indices 0..2 are seeded from
// the closed form; the recurrence step is applied only from n = 3 on, the
// range in which it is stated.
inline std::vector<LaguerreResult> laguerre_recurrence(const Params& params, int nmax) {
  detail::require_q1(params, "laguerre_recurrence");
  if (nmax < 0) throw std::domain_error("laguerre_recurrence: nmax must be nonnegative");
  CoeffTable table(params);
  std::vector<LaguerreResult> out;
  out.reserve(static_cast<std::size_t>(nmax) + 1);
  for (int n = 0; n <= std::min(nmax, 2); ++n) {
    LaguerreResult seed = laguerre_closed(params, n);
    seed.method = Method::recurrence;
    out.push_back(std::move(seed));
  }
  for (int n = 3; n <= nmax; ++n) {
    Poly acc = out[static_cast<std::size_t>(n - 1)].poly * Poly{0, Rational(-1, n)};
    for (int m = 1; m <= n; ++m) {
      Poly term = table.b(n, m) * out[static_cast<std::size_t>(n - m)].poly;
      acc = m % 2 == 1 ? acc + term : acc - term;
    }
    out.push_back({params, n, std::move(acc), Method::recurrence});
  }
  return out;
}

// Classical three-term recurrence for L_n^{(beta)}(z):
//   L_0 = 1,  L_1 = (1 + beta) - z,
//   L_n = ((2n - 1 + beta - z) L_{n-1} - (n - 1 + beta) L_{n-2}) / n.
inline std::vector<LaguerreResult> three_term(const Rational& beta, int nmax) {
  Params params(1, beta, 1);
  if (nmax < 0) throw std::domain_error("three_term: nmax must be nonnegative");
  std::vector<LaguerreResult> out;
  out.reserve(static_cast<std::size_t>(nmax) + 1);
  out.push_back({params, 0, Poly{1}, Method::recurrence});
  if (nmax >= 1) out.push_back({params, 1, Poly{Rational(1) + beta, -1}, Method::recurrence});
  for (int n = 2; n <= nmax; ++n) {
    Poly lead{Rational(2 * n - 1) + beta, -1};
    Poly p = lead * out[static_cast<std::size_t>(n - 1)].poly -
             (Rational(n - 1) + beta) * out[static_cast<std::size_t>(n - 2)].poly;
    out.push_back({params, n, Rational(1, n) * p, Method::recurrence});
  }
  return out;
}

}  // namespace lagq
