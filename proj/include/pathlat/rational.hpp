#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

#include "pathlat/errors.hpp"

namespace pathlat {

// Exact rational with normalized sign and gcd-reduced terms.
struct rational {
  long long num = 0;
  long long den = 1;

  rational() = default;
  rational(long long n) : num(n), den(1) {}
  rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    PATHLAT_REQUIRE(den != 0, "rational with zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }

  friend rational operator+(rational a, rational b) {
    return rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend rational operator-(rational a, rational b) {
    return rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend bool operator==(const rational& a, const rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const rational& a, const rational& b) {
    return a.num * b.den < b.num * a.den;
  }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }
};

}  // namespace pathlat
