#ifndef QMOM_RATIONAL_HPP
#define QMOM_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "qmom/error.hpp"

namespace qmom {

// Exact rational arithmetic for weights and slopes. Always normalized:
// gcd(num, den) == 1 and den > 0. Magnitudes here are tiny (single-digit
// weights times small dimension sums), so int64 never overflows.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0)
      throw Error(Error::Kind::parse, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0)
      den = 1;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  bool is_zero() const { return num == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0)
      throw Error(Error::Kind::domain, "rational division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  Rational operator-() const { return Rational(-num, den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
};

inline std::string to_string(const Rational& r) {
  if (r.den == 1)
    return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

// Accepts "p", "p/q", with an optional leading sign on p. Throws Kind::parse
// on anything else, including q == 0.
Rational parse_rational(const std::string& text);

} // namespace qmom

#endif
