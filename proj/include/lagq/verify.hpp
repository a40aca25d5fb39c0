#pragma once

// Cross-method verification sweep: construct the same polynomial by every
// requested route over a parameter grid and demand exact coefficient-level
// equality for every method pair. A single mismatch fails the sweep and is
// reported with its location.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "lagq/detform.hpp"
#include "lagq/laguerre.hpp"
#include "lagq/poly.hpp"
#include "lagq/recurrence.hpp"

namespace lagq {

struct GridPoint {
  int alpha = 1;
  Rational beta = 0;
  int q = 1;
  int n = 0;
};

struct PairCheck {
  Method a = Method::series;
  Method b = Method::series;
  bool pass = true;
};

struct PointResult {
  GridPoint point;
  std::vector<PairCheck> pairs;

  bool pass() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const PairCheck& p) { return p.pass; });
  }
};

struct Discrepancy {
  GridPoint point;
  Method a = Method::series;
  Method b = Method::series;
  int coeff_index = 0;
  Rational lhs;
  Rational rhs;
};

// Test hook: adds 1 to coefficient k of the given method's output at every
// grid point of order n before comparison.
struct FaultInjection {
  Method method = Method::closed;
  int n = 0;
  int k = 0;
};

struct VerifyOptions {
  std::vector<int> alphas{1, 2, 3};
  std::vector<Rational> betas{Rational(0), Rational(1, 2), Rational(-1, 3), Rational(7, 2)};
  std::vector<int> qs{1};
  int nmax = 12;
  std::vector<Method> methods{Method::series, Method::closed, Method::recurrence,
                              Method::determinant, Method::composition};
  // Orders above this are skipped by the composition method (2^(n-1) terms).
  int composition_nmax = 10;
  std::optional<FaultInjection> fault;
};

struct VerifyReport {
  std::vector<PointResult> points;
  std::optional<Discrepancy> first_discrepancy;

  bool pass() const {
    return std::all_of(points.begin(), points.end(),
                       [](const PointResult& p) { return p.pass(); });
  }
};

namespace detail {

inline Poly corrupt_coefficient(const Poly& p, int k) {
  std::vector<Rational> coeffs = p.coefficients();
  if (static_cast<std::size_t>(k) >= coeffs.size())
    coeffs.resize(static_cast<std::size_t>(k) + 1, Rational(0));
  coeffs[static_cast<std::size_t>(k)] += 1;
  return Poly(std::move(coeffs));
}

// First index at which the coefficient sequences differ.
inline std::optional<int> first_difference(const Poly& a, const Poly& b) {
  const int top = std::max(a.degree().value_or(-1), b.degree().value_or(-1));
  for (int i = 0; i <= top; ++i)
    if (a.coeff(i) != b.coeff(i)) return i;
  return std::nullopt;
}

}  // namespace detail

// Runs the sweep in deterministic grid order (alphas x betas x qs x n).
// Throws unsupported_parameter up front if a requested method cannot handle
// a q in the grid.
inline VerifyReport run_verify(const VerifyOptions& opt) {
  for (int q : opt.qs)
    for (Method m : opt.methods)
      if (q != 1 && m != Method::series && m != Method::closed)
        throw unsupported_parameter("verify: method '" + std::string(to_string(m)) +
                                    "' requires q = 1");

  VerifyReport report;
  for (int alpha : opt.alphas) {
    for (const Rational& beta : opt.betas) {
      for (int q : opt.qs) {
        Params params(alpha, beta, q);
        const bool q1 = q == 1;

        const bool want_recurrence =
            q1 && std::count(opt.methods.begin(), opt.methods.end(), Method::recurrence) > 0;
        std::vector<LaguerreResult> recurrence_seq;
        if (want_recurrence) recurrence_seq = laguerre_recurrence(params, opt.nmax);

        std::optional<CoeffTable> table;
        if (q1) table.emplace(params);

        for (int n = 0; n <= opt.nmax; ++n) {
          std::vector<std::pair<Method, Poly>> polys;
          for (Method m : opt.methods) {
            switch (m) {
              case Method::series:
                polys.emplace_back(m, laguerre_series(params, n).poly);
                break;
              case Method::closed:
                polys.emplace_back(m, laguerre_closed(params, n).poly);
                break;
              case Method::recurrence:
                if (want_recurrence)
                  polys.emplace_back(m, recurrence_seq[static_cast<std::size_t>(n)].poly);
                break;
              case Method::determinant:
                if (q1) polys.emplace_back(m, laguerre_det(*table, n).poly);
                break;
              case Method::composition:
                if (q1 && n <= opt.composition_nmax)
                  polys.emplace_back(m, composition_expansion(*table, n).poly);
                break;
            }
          }

          if (opt.fault && opt.fault->n == n) {
            for (auto& [m, p] : polys)
              if (m == opt.fault->method) p = detail::corrupt_coefficient(p, opt.fault->k);
          }

          PointResult result;
          result.point = {alpha, beta, q, n};
          for (std::size_t i = 0; i < polys.size(); ++i) {
            for (std::size_t j = i + 1; j < polys.size(); ++j) {
              auto diff = detail::first_difference(polys[i].second, polys[j].second);
              result.pairs.push_back({polys[i].first, polys[j].first, !diff.has_value()});
              if (diff && !report.first_discrepancy) {
                report.first_discrepancy = Discrepancy{
                    result.point, polys[i].first, polys[j].first, *diff,
                    polys[i].second.coeff(*diff), polys[j].second.coeff(*diff)};
              }
            }
          }
          report.points.push_back(std::move(result));
        }
      }
    }
  }
  return report;
}

}  // namespace lagq
