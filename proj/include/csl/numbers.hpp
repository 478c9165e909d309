#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace csl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Binomial coefficient with the combinatorial conventions C(a,b)=0 for
// b<0 or b>a, C(a,0)=1. Arguments may be large; the result is exact.
Int binomial(long long a, long long b);

/// Element of Q(sqrt(5)), stored as a + b*sqrt(5) with rational a, b.
/// Exact arithmetic for the H3/H4 Cartan data; crystallographic types
/// keep b == 0 throughout.
struct QuadExt {
  Rat a{0};
  Rat b{0};

  QuadExt() = default;
  QuadExt(long long v) : a(v) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}

  static QuadExt sqrt5() { return QuadExt{Rat(0), Rat(1)}; }
  // (1 + sqrt 5)/2, the ratio entering -2cos(pi/5).
  static QuadExt golden() { return QuadExt{Rat(1, 2), Rat(1, 2)}; }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  QuadExt operator-() const { return {-a, -b}; }
  QuadExt operator+(const QuadExt& o) const { return {a + o.a, b + o.b}; }
  QuadExt operator-(const QuadExt& o) const { return {a - o.a, b - o.b}; }
  QuadExt operator*(const QuadExt& o) const {
    return {a * o.a + 5 * b * o.b, a * o.b + b * o.a};
  }
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

  bool operator==(const QuadExt& o) const { return a == o.a && b == o.b; }
  bool operator!=(const QuadExt& o) const { return !(*this == o); }
  bool operator<(const QuadExt& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }

  // Sign of a + b*sqrt(5) as a real number, exact.
  int sign() const;

  std::string str() const;
};

}  // namespace csl
