#pragma once

// Double-precision evaluation of the defining series for real alpha > 0,
// through a log-gamma kernel. The exact modules cannot represent non-integer
// alpha; this path trades exactness for generality and reports how much
// cancellation the alternating sum suffered.

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lagq/rational.hpp"

namespace lagq {

namespace detail {

// Lanczos rational approximation for double precision,
// g = 6.024680040776729583740234375, 13 terms. The numerator includes the
// sqrt(2*pi) factor. Relative error of the sum is below 1e-15 over x > 0.
inline double lanczos_sum(double x) {
  static const double num[13] = {
      23531376880.41075968857200767445163675473,
      42919803642.64909876895789904700198885093,
      35711959237.35566804944018545154716670596,
      17921034426.03720969991975575445893111267,
      6039542586.35202800506429164430729792107,
      1439720407.311721673663223072794912393972,
      248874557.8620541565114603864132294232163,
      31426415.58540019438061423162831820536287,
      2876370.628935372441225409051620849613599,
      186056.2653952234950402949897160456992822,
      8071.672002365816210638002902272250613822,
      210.8242777515793458725097339207133627117,
      2.506628274631000270164908177133837338626,
  };
  static const double den[13] = {
      0, 39916800, 120543840, 150917976, 105258076, 45995730, 13339535,
      2637558, 357423, 32670, 1925, 66, 1,
  };
  double s_num, s_den;
  if (x <= 1.0) {
    s_num = num[12];
    s_den = den[12];
    for (int i = 11; i >= 0; --i) {
      s_num = s_num * x + num[i];
      s_den = s_den * x + den[i];
    }
  } else {
    // Evaluate in 1/x so large arguments cannot overflow the Horner chains.
    const double r = 1.0 / x;
    s_num = num[0];
    s_den = den[0];
    for (int i = 1; i <= 12; ++i) {
      s_num = s_num * r + num[i];
      s_den = s_den * r + den[i];
    }
  }
  return s_num / s_den;
}

inline constexpr double kLanczosG = 6.024680040776729583740234375;

}  // namespace detail

// Natural log of Gamma(x) for x > 0. Exact at the two zeros x = 1 and x = 2;
// elsewhere the error is a few ulp of the dominant Lanczos terms.
inline double log_gamma(double x) {
  if (!(x > 0)) throw std::domain_error("log_gamma: requires x > 0");
  if (x == 1.0 || x == 2.0) return 0.0;
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  const double t = x + detail::kLanczosG - 0.5;
  return std::log(detail::lanczos_sum(x)) + (x - 0.5) * std::log(t) - t;
}

struct FloatEval {
  double value = 0;
  double abs_term_sum = 0;  // sum of |t_k| over the series terms
  double condition = 0;     // abs_term_sum / |value|; +inf when value == 0
};

// Sums the defining series
//   t_k = Gamma(alpha n + beta + 1) / (Gamma(n+1) Gamma(alpha k + beta + 1))
//         * (-n)^(qk) z^k / k!
// for k = 0..floor(n/q). The rising factorial (-n)^(qk) is an exact integer
// and is computed as one, so no log-gamma of a negative argument is ever
// needed; its magnitude overflows double only past n = 170, where a
// log-gamma difference takes over. z = 0 keeps only the k = 0 term.
inline FloatEval laguerre_eval_float(double alpha, double beta, int q, int n, double z) {
  if (!(alpha > 0)) throw std::domain_error("laguerre_eval_float: requires alpha > 0");
  if (!(beta > -1)) throw std::domain_error("laguerre_eval_float: requires beta > -1");
  if (q < 1) throw std::domain_error("laguerre_eval_float: requires q >= 1");
  if (n < 0) throw std::domain_error("laguerre_eval_float: requires n >= 0");
  if (!std::isfinite(z)) throw std::domain_error("laguerre_eval_float: z must be finite");

  const int d = n / q;
  const double prefix = log_gamma(alpha * n + beta + 1.0) - log_gamma(n + 1.0);
  const double log_abs_z = z == 0 ? 0.0 : std::log(std::fabs(z));

  FloatEval out;
  for (int k = 0; k <= d; ++k) {
    if (z == 0 && k > 0) break;
    // (-n)^(qk) = product of (i - n) for i = 0..qk-1: qk <= n strictly
    // negative integers, so the sign is (-1)^(qk).
    BigInt rising = 1;
    for (int i = 0; i < q * k; ++i) rising *= i - n;
    const int sign_rising = rising < 0 ? -1 : 1;
    double log_abs_rising;
    const double rising_d = rising.convert_to<double>();
    if (std::isfinite(rising_d)) {
      log_abs_rising = std::log(std::fabs(rising_d));
    } else {
      log_abs_rising = log_gamma(n + 1.0) - log_gamma(static_cast<double>(n - q * k) + 1.0);
    }
    const double log_mag = prefix - log_gamma(alpha * k + beta + 1.0) - log_gamma(k + 1.0) +
                           k * log_abs_z + log_abs_rising;
    const double mag = std::exp(log_mag);
    const int sign = sign_rising * ((z < 0 && k % 2 == 1) ? -1 : 1);
    out.value += sign * mag;
    out.abs_term_sum += mag;
  }
  out.condition = out.value == 0 ? std::numeric_limits<double>::infinity()
                                 : out.abs_term_sum / std::fabs(out.value);
  return out;
}

}  // namespace lagq
