#pragma once

// Dense univariate polynomials in z over Rational.
//
// Coefficients are stored constant term first with trailing zeros trimmed,
// so the invariant is: the last stored coefficient is nonzero, and the zero
// polynomial stores nothing. The zero polynomial has no degree (nullopt)
// rather than a sentinel integer.

#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lagq/rational.hpp"

namespace lagq {

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rational& constant) : c_{constant} { trim(); }
  explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static Poly zero() { return Poly(); }

  bool is_zero() const { return c_.empty(); }

  std::optional<int> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<int>(c_.size()) - 1;
  }

  // Coefficient of z^i; zero beyond the degree.
  const Rational& coeff(int i) const {
    static const Rational kZero = 0;
    if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return kZero;
    return c_[static_cast<std::size_t>(i)];
  }

  const std::vector<Rational>& coefficients() const { return c_; }

  // Exact Horner evaluation.
  Rational eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly operator-() const {
    std::vector<Rational> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(std::move(r));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }

  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  // Schoolbook product; degrees stay small enough that nothing fancier pays.
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }

  friend Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> r(p.c_.size());
    for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = s * p.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Serialization: ordered coefficient array of Rational strings,
  // constant term first.
  std::vector<std::string> to_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(c.to_string());
    return out;
  }

  static Poly from_strings(const std::vector<std::string>& coeffs) {
    std::vector<Rational> r;
    r.reserve(coeffs.size());
    for (const auto& s : coeffs) r.push_back(Rational::parse(s));
    return Poly(std::move(r));
  }

  // Human-readable form, e.g. "1 - 2 z + 1/2 z^2".
  std::string pretty(std::string_view var = "z") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const Rational& c = c_[i];
      if (c.is_zero()) continue;
      Rational a = abs(c);
      if (first) {
        if (c.sign() < 0) os << "-";
        first = false;
      } else {
        os << (c.sign() < 0 ? " - " : " + ");
      }
      bool unit = a == Rational(1) && i > 0;
      if (!unit) os << a.to_string();
      if (i > 0) {
        if (!unit) os << " ";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return first ? "0" : os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.pretty(); }

}  // namespace lagq
