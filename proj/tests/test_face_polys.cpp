#include <doctest.h>

#include "csl/face_polys.hpp"

using namespace csl;

namespace {

std::vector<Int> residues(const QPolynomial& p, int N) {
  return p.residues_mod_qn_minus_1(N);
}

std::vector<Int> ints(std::vector<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("face polynomial residues match the worked examples") {
  CHECK(residues(face_poly(ComplexType(Family::A, 3, 2), 2), 8) ==
        ints({2, 1, 2, 1, 2, 1, 2, 1}));
  CHECK(residues(face_poly(ComplexType(Family::B, 3, 1), 1), 8) ==
        ints({3, 0, 3, 0, 3, 0, 3, 0}));
  CHECK(residues(face_poly(ComplexType(Family::D, 2, 3), 2), 8) ==
        ints({4, 0, 4, 0, 4, 0, 4, 0}));
}

TEST_CASE("face counts specialize the polynomials at q = 1") {
  for (int s = 1; s <= 3; ++s) {
    for (int n = 1; n <= 6; ++n) {
      ComplexType t(Family::A, n, s);
      for (int k = 0; k <= t.max_k(); ++k)
        CHECK(face_poly(t, k).value_at_one() == face_count(t, k));
    }
    for (int n = 2; n <= 5; ++n) {
      ComplexType tb(Family::B, n, s);
      for (int k = 0; k <= n; ++k)
        CHECK(face_poly(tb, k).value_at_one() == face_count(tb, k));
      ComplexType td(Family::D, n, s);
      for (int k = 0; k <= n; ++k) {
        CHECK(face_poly(td, k).value_at_one() == face_count(td, k));
        CHECK(face_poly_d_alternate(s, n, k).value_at_one() ==
              face_count(td, k));
      }
    }
    for (int a = 3; a <= 8; ++a) {
      ComplexType ti(Family::I2, a, s);
      for (int k = 0; k <= 2; ++k)
        CHECK(face_poly(ti, k).value_at_one() == face_count(ti, k));
    }
  }
}

TEST_CASE("alternate type D polynomial examples") {
  CHECK(face_poly_d_alternate(3, 2, 2).value_at_one() == 16);
  CHECK(face_poly_d_alternate(2, 4, 0) == QPolynomial::constant(1));
  CHECK(face_poly_d_alternate(1, 4, 4) == q_catalan(coxeter_datum("D", 4), 1));
}

TEST_CASE("generalized Catalan values") {
  CHECK(q_catalan(coxeter_datum("A", 2), 1).value_at_one() == 5);
  CHECK(q_catalan(coxeter_datum("E6"), 1).value_at_one() == 833);
  CHECK(q_catalan(coxeter_datum("E7"), 1).value_at_one() == 4160);
  CHECK(q_catalan(coxeter_datum("E8"), 1).value_at_one() == 25080);
  CHECK(q_catalan(coxeter_datum("F4"), 1).value_at_one() == 105);
  CHECK(q_catalan(coxeter_datum("H3"), 1).value_at_one() == 32);
  CHECK(q_catalan(coxeter_datum("H4"), 1).value_at_one() == 280);
}

TEST_CASE("facet polynomials equal the Catalan polynomials") {
  // For type A the polygon parameter n corresponds to rank n-1 and the
  // Catalan polynomial sits at the top index k = n-1 of the face grid.
  for (int s = 1; s <= 3; ++s) {
    for (int n = 2; n <= 6; ++n)
      CHECK(face_poly(ComplexType(Family::A, n, s), n - 1) ==
            q_catalan(coxeter_datum("A", n - 1), s));
    for (int n = 2; n <= 5; ++n) {
      CHECK(face_poly(ComplexType(Family::B, n, s), n) ==
            q_catalan(coxeter_datum("B", n), s));
      CHECK(face_poly(ComplexType(Family::D, n, s), n) ==
            q_catalan(coxeter_datum("D", n), s));
      CHECK(face_poly_d_alternate(s, n, n) ==
            q_catalan(coxeter_datum("D", n), s));
    }
    for (int a = 3; a <= 8; ++a)
      CHECK(face_poly(ComplexType(Family::I2, a, s), 2) ==
            q_catalan(coxeter_datum("I2", a), s));
  }
}

TEST_CASE("closed form evaluation examples") {
  CHECK(closed_form_eval(ComplexType(Family::A, 3, 2), 2, RootOfUnitySpec(2)) ==
        4);
  // d >= 3 with d not dividing k and no odd-k escape hatch.
  CHECK(closed_form_eval(ComplexType(Family::A, 4, 1), 1, RootOfUnitySpec(3)) ==
        0);
  CHECK(closed_form_eval(ComplexType(Family::D, 2, 3), 2, RootOfUnitySpec(2)) ==
        16);
  CHECK_THROWS(closed_form_eval(ComplexType(Family::A, 3, 2), 2,
                                RootOfUnitySpec(3)));
}

TEST_CASE("closed forms agree with cyclotomic evaluation") {
  auto check_grid = [](Family fam, int n_lo, int n_hi, int s_hi) {
    for (int s = 1; s <= s_hi; ++s)
      for (int n = n_lo; n <= n_hi; ++n) {
        ComplexType t(fam, n, s);
        const int N = t.group_order();
        for (int k = 0; k <= t.max_k(); ++k) {
          const QPolynomial p = face_poly(t, k);
          for (int d = 1; d <= N; ++d) {
            if (N % d != 0) continue;
            CHECK(closed_form_eval(t, k, RootOfUnitySpec(d)) ==
                  eval_at_primitive_root(p, RootOfUnitySpec(d)));
          }
        }
      }
  };
  check_grid(Family::A, 1, 6, 3);
  check_grid(Family::B, 2, 5, 3);
  check_grid(Family::D, 2, 5, 3);
  check_grid(Family::I2, 3, 8, 4);
}

TEST_CASE("the alternate D polynomial passes the same evaluations") {
  for (int s = 1; s <= 3; ++s)
    for (int n = 2; n <= 5; ++n) {
      ComplexType t(Family::D, n, s);
      const int N = t.group_order();
      for (int k = 0; k <= n; ++k) {
        const QPolynomial p = face_poly_d_alternate(s, n, k);
        for (int d = 1; d <= N; ++d) {
          if (N % d != 0) continue;
          CHECK(closed_form_eval(t, k, RootOfUnitySpec(d)) ==
                eval_at_primitive_root(p, RootOfUnitySpec(d)));
        }
      }
    }
}
