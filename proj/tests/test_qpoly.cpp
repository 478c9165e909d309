#include <doctest.h>

#include "csl/qpoly.hpp"

using namespace csl;

namespace {

QPolynomial poly(std::vector<long long> cs) {
  std::vector<Int> v(cs.begin(), cs.end());
  return QPolynomial(std::move(v));
}

// Alternating coefficient sum gives the value at -1.
Int alt_sum(const QPolynomial& p) {
  Int s = 0;
  for (int i = 0; i <= p.degree(); ++i)
    s += (i % 2 == 0) ? p.coeff(i) : -p.coeff(i);
  return s;
}

}  // namespace

TEST_CASE("q_int basics") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == poly({1}));
  CHECK(q_int(4) == poly({1, 1, 1, 1}));
}

TEST_CASE("gauss binomial small values") {
  CHECK(gauss_binomial(5, 2) == poly({1, 1, 2, 2, 2, 1, 1}));
  CHECK(gauss_binomial(7, 0) == poly({1}));
  CHECK(gauss_binomial(4, 2, 2) == gauss_binomial(4, 2).substitute_power(2));
  CHECK(gauss_binomial(3, 5).is_zero());
}

TEST_CASE("gauss binomial recurrence agrees with the factorial quotient") {
  for (int m = 0; m <= 16; ++m)
    for (int k = 0; k <= m; ++k)
      CHECK(gauss_binomial(m, k) == gauss_binomial_by_division(m, k));
}

TEST_CASE("gauss binomials are nonnegative and palindromic") {
  for (int m = 0; m <= 30; ++m)
    for (int k = 0; k <= m; ++k) {
      const QPolynomial g = gauss_binomial(m, k);
      CHECK(g.nonnegative());
      CHECK(g.palindromic());
    }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == poly({-1, 1}));
  CHECK(cyclotomic(4) == poly({1, 0, 1}));
  CHECK(cyclotomic(6) == poly({1, -1, 1}));
  for (int N = 1; N <= 64; ++N) {
    QPolynomial prod = QPolynomial::constant(1);
    for (int d = 1; d <= N; ++d)
      if (N % d == 0) prod *= cyclotomic(d);
    std::vector<Int> want(N + 1, Int(0));
    want[0] = -1;
    want[N] = 1;
    CHECK(prod == QPolynomial(std::move(want)));
  }
}

TEST_CASE("evaluation at primitive roots") {
  const QPolynomial p = poly({2, 1, 2, 1, 2, 1, 2, 1});
  CHECK(eval_at_primitive_root(p, RootOfUnitySpec(2)) == alt_sum(p));
  CHECK(eval_at_primitive_root(p, RootOfUnitySpec(2)) == 4);
  CHECK(eval_at_primitive_root(p, RootOfUnitySpec(8)) == 0);
  CHECK(eval_at_primitive_root(p, RootOfUnitySpec(1)) == p.value_at_one());
  CHECK_THROWS_AS(eval_at_primitive_root(poly({0, 1}), RootOfUnitySpec(3)),
                  NonConstantRemainder);
}

TEST_CASE("q-Lucas examples") {
  CHECK(q_lucas(5, 2, RootOfUnitySpec(3)) == 1);
  CHECK(eval_at_primitive_root(gauss_binomial(5, 2), RootOfUnitySpec(3)) == 1);
  for (int m = 1; m <= 10; ++m)
    for (int d = 2; d <= 6; ++d)
      CHECK(q_lucas(m, 0, RootOfUnitySpec(d)) == 1);
  CHECK(q_lucas(6, 3, RootOfUnitySpec(3)) == 2);
  CHECK(eval_at_primitive_root(gauss_binomial(6, 3), RootOfUnitySpec(3)) == 2);
}

TEST_CASE("q-Lucas agrees with direct cyclotomic reduction") {
  // Agreement holds in Z[w], i.e. modulo the cyclotomic polynomial; when
  // the value happens to be rational the integer shortcut agrees as well.
  for (int m = 0; m <= 24; ++m)
    for (int k = 0; k <= m; ++k)
      for (int d = 2; d <= 12; ++d) {
        const QPolynomial& phi = cyclotomic(d);
        const QPolynomial lhs = gauss_binomial(m, k).rem_monic(phi);
        const QPolynomial rhs =
            (QPolynomial::constant(binomial(m / d, k / d)) *
             gauss_binomial(m % d, k % d))
                .rem_monic(phi);
        CHECK(lhs == rhs);
        if (lhs.degree() <= 0)
          CHECK(q_lucas(m, k, RootOfUnitySpec(d)) ==
                eval_at_primitive_root(gauss_binomial(m, k),
                                       RootOfUnitySpec(d)));
      }
}

TEST_CASE("exact division rejects non-exact quotients") {
  CHECK_THROWS_AS(poly({1, 1, 1}).exact_div(poly({1, 1})), std::logic_error);
  const QPolynomial prod = q_int(6) * q_int(5);
  CHECK(prod.exact_div(q_int(3)) * q_int(3) == prod);
}
