#pragma once

#include <string>
#include <vector>

#include "csl/qpoly.hpp"

namespace csl {

enum class Family { A, B, D, I2 };

std::string family_name(Family f);
Family family_from_string(const std::string& s);

/// Parameters of one generalized cluster complex in the four infinite
/// families. For A the parameter n is the polygon parameter: the model is
/// an (sn+2)-gon and the underlying root system has rank n-1. For I2 the
/// parameter holds a.
struct ComplexType {
  Family family;
  int n;  // n for A/B/D, a for I2
  int s;

  ComplexType(Family f, int n_or_a, int fuss);

  // Order of the cyclic group acting on the faces (sh + 2).
  int group_order() const;
  // Largest admissible k (A: n-1; B, D: n; I2: 2).
  int max_k() const;
  std::string str() const;
};

/// Coxeter number and exponents.
struct CoxeterDatum {
  std::string name;
  int rank = 0;
  int h = 0;
  std::vector<int> exponents;
};

// type in {A,B,D,E6,E7,E8,F4,H3,H4,I2}; rank_or_a is the rank for the
// infinite families and a for I2 (ignored for the exceptional types).
CoxeterDatum coxeter_datum(const std::string& type, int rank_or_a = 0);

// Number of k-faces of the complex, exact closed form.
Int face_count(const ComplexType& t, int k);

// The q-analogue face polynomial: G(s,n,k;q), H(s,n,k;q), F(s,n,k;q), and
// for I2 the vertex polynomial (k=1) or the edge polynomial (k=2).
QPolynomial face_poly(const ComplexType& t, int k);

// The alternative type-D polynomial; same specializations and sieving
// behaviour as face_poly for D.
QPolynomial face_poly_d_alternate(int s, int n, int k);

// Cat^(s)(Phi, q) = prod [sh+e_i+1]_q / [e_i+1]_q, exact.
QPolynomial q_catalan(const CoxeterDatum& datum, int s);

// Value of face_poly(t,k) at a primitive d-th root of unity by the
// case-split closed forms. d must divide the group order.
Int closed_form_eval(const ComplexType& t, int k, RootOfUnitySpec spec);

}  // namespace csl
