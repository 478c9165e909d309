#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "csl/numbers.hpp"

namespace csl {

/// Thrown by eval_at_primitive_root when the remainder mod the cyclotomic
/// polynomial is not a constant, i.e. the polynomial's value at a primitive
/// d-th root of unity depends on the choice of root. For a valid sieving
/// candidate this never happens, so it doubles as a diagnostic.
struct NonConstantRemainder : std::runtime_error {
  explicit NonConstantRemainder(const std::string& what)
      : std::runtime_error(what) {}
};

/// Dense univariate polynomial over arbitrary-precision integers.
/// coeffs[i] is the coefficient of q^i; canonical form keeps the last
/// coefficient nonzero and represents zero as the empty vector.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    trim();
  }
  static QPolynomial constant(Int v);
  static QPolynomial monomial(Int v, int exp);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Int(0);
  }

  bool operator==(const QPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const QPolynomial& o) const { return !(*this == o); }

  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }
  QPolynomial& operator-=(const QPolynomial& o) { return *this = *this - o; }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  QPolynomial shifted(int exp) const;  // multiply by q^exp
  // Substitute q -> q^e (e >= 1).
  QPolynomial substitute_power(int e) const;

  // Exact quotient; throws std::logic_error if the division leaves a
  // remainder (all callers divide quantities that are exact by theorem).
  QPolynomial exact_div(const QPolynomial& divisor) const;
  // Remainder of division by a monic polynomial.
  QPolynomial rem_monic(const QPolynomial& divisor) const;

  Int value_at_one() const;
  bool palindromic() const;
  bool nonnegative() const;

  // Coefficient list of the residue mod q^N - 1 (length N).
  std::vector<Int> residues_mod_qn_minus_1(int N) const;

  std::string str() const;

 private:
  void trim();
  std::vector<Int> c_;
};

// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
QPolynomial q_int(int n);
// [n]!_q
QPolynomial q_factorial(int n);
// Gaussian binomial; base 2 substitutes q -> q^2 in the result.
QPolynomial gauss_binomial(int m, int k, int base = 1);
// Gaussian binomial by the factorial quotient; retained as a cross-check
// of the recurrence used by gauss_binomial.
QPolynomial gauss_binomial_by_division(int m, int k);

// d-th cyclotomic polynomial (d >= 1), memoized.
const QPolynomial& cyclotomic(int d);

/// Order of the primitive root of unity used for evaluation.
struct RootOfUnitySpec {
  int d = 1;
  explicit RootOfUnitySpec(int order) : d(order) {
    if (d < 1) throw std::invalid_argument("root of unity order must be >= 1");
  }
};

// Value of p at a primitive d-th root of unity, by reduction mod the
// cyclotomic polynomial. Throws NonConstantRemainder if ill-defined.
Int eval_at_primitive_root(const QPolynomial& p, RootOfUnitySpec spec);

// [m brack k]_q at a primitive d-th root of unity via the q-Lucas theorem
// (d >= 2): with m = ad+b, k = rd+s, this is C(a,r) * [b brack s]_{omega}.
Int q_lucas(int m, int k, RootOfUnitySpec spec);

}  // namespace csl
