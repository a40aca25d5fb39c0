#pragma once

// Exact rational scalar type used for every coefficient in the library.
//
// Values are kept in lowest terms with a positive denominator; zero is
// stored as 0/1. The integer backend is boost::multiprecision::cpp_int,
// so numerators and denominators grow without overflow.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lagq {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(BigInt n) : v_(std::move(n)) {}
  Rational(long long num, long long den) { assign(BigInt(num), BigInt(den)); }
  Rational(BigInt num, BigInt den) { assign(std::move(num), std::move(den)); }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }

  bool is_zero() const { return v_.is_zero(); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return v_.sign(); }

  Rational operator-() const { return Rational(Backend(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  double to_double() const { return v_.convert_to<double>(); }

  // "num/den" with the denominator omitted when it is 1, e.g. "-1/3", "7".
  std::string to_string() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
  }

  // Accepts "p/q", plain integers, and finite decimal strings ("0.5" -> 1/2).
  // Throws std::invalid_argument on malformed input and std::domain_error on
  // a zero denominator.
  static Rational parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  using Backend = boost::multiprecision::cpp_rational;

  explicit Rational(Backend v) : v_(std::move(v)) {}

  void assign(BigInt num, BigInt den) {
    if (den.is_zero()) throw std::domain_error("Rational: zero denominator");
    v_ = Backend(std::move(num), std::move(den));
  }

  Backend v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) throw std::invalid_argument("Rational: empty string");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw std::invalid_argument("Rational: sign without digits");

  auto all_digits = [](std::string_view t) {
    if (t.empty()) return false;
    for (char c : t)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto apply_sign = [&](Rational r) { return negative ? -r : r; };

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw std::invalid_argument("Rational: malformed fraction '" + std::string(text) + "'");
    return apply_sign(Rational(BigInt(std::string(num)), BigInt(std::string(den))));
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw std::invalid_argument("Rational: malformed decimal '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("Rational: malformed decimal '" + std::string(text) + "'");
    BigInt digits = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
    BigInt scale = 1;
    for (char c : frac) {
      digits = digits * 10 + (c - '0');
      scale *= 10;
    }
    return apply_sign(Rational(digits, scale));
  }

  if (!all_digits(s))
    throw std::invalid_argument("Rational: malformed number '" + std::string(text) + "'");
  return apply_sign(Rational(BigInt(std::string(s))));
}

}  // namespace lagq
