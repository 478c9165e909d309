#include "csl/face_polys.hpp"

#include <sstream>
#include <stdexcept>

namespace csl {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::I2: return "I2";
  }
  throw std::logic_error("bad family");
}

Family family_from_string(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "D") return Family::D;
  if (s == "I2") return Family::I2;
  throw std::invalid_argument("unknown family: " + s);
}

ComplexType::ComplexType(Family f, int n_or_a, int fuss)
    : family(f), n(n_or_a), s(fuss) {
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  switch (family) {
    case Family::A:
      if (n < 1) throw std::invalid_argument("type A needs n >= 1");
      break;
    case Family::B:
    case Family::D:
      if (n < 2) throw std::invalid_argument("types B, D need n >= 2");
      break;
    case Family::I2:
      if (n < 3) throw std::invalid_argument("type I2 needs a >= 3");
      break;
  }
}

int ComplexType::group_order() const {
  switch (family) {
    case Family::A: return s * n + 2;
    case Family::B: return 2 * s * n + 2;
    case Family::D: return 2 * s * (n - 1) + 2;
    case Family::I2: return s * n + 2;
  }
  throw std::logic_error("bad family");
}

int ComplexType::max_k() const {
  switch (family) {
    case Family::A: return n - 1;
    case Family::B:
    case Family::D: return n;
    case Family::I2: return 2;
  }
  throw std::logic_error("bad family");
}

std::string ComplexType::str() const {
  std::ostringstream os;
  os << family_name(family) << "(" << (family == Family::I2 ? "a=" : "n=") << n
     << ", s=" << s << ")";
  return os.str();
}

CoxeterDatum coxeter_datum(const std::string& type, int rank_or_a) {
  CoxeterDatum d;
  d.name = type;
  if (type == "A") {
    d.rank = rank_or_a;
    d.h = rank_or_a + 1;
    for (int i = 1; i <= rank_or_a; ++i) d.exponents.push_back(i);
  } else if (type == "B") {
    d.rank = rank_or_a;
    d.h = 2 * rank_or_a;
    for (int i = 1; i <= rank_or_a; ++i) d.exponents.push_back(2 * i - 1);
  } else if (type == "D") {
    d.rank = rank_or_a;
    d.h = 2 * (rank_or_a - 1);
    for (int i = 1; i <= rank_or_a - 1; ++i) d.exponents.push_back(2 * i - 1);
    d.exponents.push_back(rank_or_a - 1);
  } else if (type == "E6") {
    d.rank = 6;
    d.h = 12;
    d.exponents = {1, 4, 5, 7, 8, 11};
  } else if (type == "E7") {
    d.rank = 7;
    d.h = 18;
    d.exponents = {1, 5, 7, 9, 11, 13, 17};
  } else if (type == "E8") {
    d.rank = 8;
    d.h = 30;
    d.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
  } else if (type == "F4") {
    d.rank = 4;
    d.h = 12;
    d.exponents = {1, 5, 7, 11};
  } else if (type == "H3") {
    d.rank = 3;
    d.h = 10;
    d.exponents = {1, 5, 9};
  } else if (type == "H4") {
    d.rank = 4;
    d.h = 30;
    d.exponents = {1, 11, 19, 29};
  } else if (type == "I2") {
    d.rank = 2;
    d.h = rank_or_a;
    d.exponents = {1, rank_or_a - 1};
  } else {
    throw std::invalid_argument("unknown Coxeter type: " + type);
  }
  return d;
}

Int face_count(const ComplexType& t, int k) {
  if (k < 0 || k > t.max_k())
    throw std::out_of_range("k out of range for " + t.str());
  const long long s = t.s, n = t.n;
  switch (t.family) {
    case Family::A:
      return binomial(s * n + k + 1, k) * binomial(n - 1, k) / (k + 1);
    case Family::B:
      return binomial(s * n + k, k) * binomial(n, k);
    case Family::D:
      return binomial(s * (n - 1) + k, k) * binomial(n, k) +
             binomial(s * (n - 1) + k - 1, k) * binomial(n - 2, k - 2);
    case Family::I2:
      if (k == 0) return 1;
      if (k == 1) return s * n + 2;
      return Int(s * n + 2) * (s + 1) / 2;
  }
  throw std::logic_error("bad family");
}

namespace {

// Product of two base-q^2 Gaussian binomials, zero if either index pair
// is out of range.
QPolynomial gb2_pair(int m1, int k1, int m2, int k2) {
  if (k1 < 0 || k1 > m1 || k2 < 0 || k2 > m2) return {};
  return gauss_binomial(m1, k1, 2) * gauss_binomial(m2, k2, 2);
}

}  // namespace

QPolynomial face_poly(const ComplexType& t, int k) {
  if (k < 0 || k > t.max_k())
    throw std::out_of_range("k out of range for " + t.str());
  const int s = t.s, n = t.n;
  switch (t.family) {
    case Family::A:
      return (gauss_binomial(s * n + k + 1, k) * gauss_binomial(n - 1, k))
          .exact_div(q_int(k + 1));
    case Family::B:
      return gauss_binomial(s * n + k, k, 2) * gauss_binomial(n, k, 2);
    case Family::D: {
      const int p = s * (n - 1);
      QPolynomial plain =
          gb2_pair(p + k, k, n - 1, k) + gb2_pair(p + k, k, n - 2, k - 2);
      QPolynomial weighted =
          gb2_pair(p + k, k, n - 2, k - 1) + gb2_pair(p + k - 1, k, n - 2, k - 2);
      return plain + weighted.shifted(n);
    }
    case Family::I2: {
      const int N = s * n + 2;
      if (k == 0) return QPolynomial::constant(1);
      if (k == 1)
        return (n % 2 == 1) ? q_int(N) : q_int(N).substitute_power(2);
      return (q_int(N) * q_int(s * n + n))
          .exact_div(q_int(2) * q_int(n));
    }
  }
  throw std::logic_error("bad family");
}

QPolynomial face_poly_d_alternate(int s, int n, int k) {
  ComplexType t(Family::D, n, s);
  if (k < 0 || k > t.max_k())
    throw std::out_of_range("k out of range for " + t.str());
  const int p = s * (n - 1);
  QPolynomial head = gb2_pair(p + k, k, n - 2, k);
  QPolynomial both = gb2_pair(p + k, k, n - 2, k - 1);
  QPolynomial tail =
      gb2_pair(p + k, k, n - 2, k - 2) + gb2_pair(p + k - 1, k, n - 2, k - 2).shifted(n);
  return head + both + both.shifted(n) + tail;
}

QPolynomial q_catalan(const CoxeterDatum& datum, int s) {
  QPolynomial num = QPolynomial::constant(1);
  QPolynomial den = QPolynomial::constant(1);
  for (int e : datum.exponents) {
    num *= q_int(s * datum.h + e + 1);
    den *= q_int(e + 1);
  }
  return num.exact_div(den);
}

namespace {

Int closed_form_a(int s, int n, int k, int d) {
  const long long sn = static_cast<long long>(s) * n;
  if (d == 2 && k % 2 == 1 && n % 2 == 0)
    return binomial((sn + k + 1) / 2, (k + 1) / 2) *
           binomial((n - 2) / 2, (k - 1) / 2);
  if (k % d == 0)
    return binomial((sn + 2 + k) / d - 1, k / d) * binomial((n - 1) / d, k / d);
  return 0;
}

Int closed_form_b(int s, int n, int k, int d) {
  const long long sn = static_cast<long long>(s) * n;
  if (d == 2) return binomial(sn + k, k) * binomial(n, k);
  if (d % 2 == 1 && k % d == 0)
    return binomial((sn + 1 + k) / d - 1, k / d) * binomial((n - 1) / d, k / d);
  if (d % 2 == 0 && (2 * k) % d == 0)
    return binomial((2 * sn + 2 + 2 * k) / d - 1, 2 * k / d) *
           binomial(2 * (n - 1) / d, 2 * k / d);
  return 0;
}

Int closed_form_d(int s, int n, int k, int d) {
  const long long p = static_cast<long long>(s) * (n - 1);
  if (d == 2) {
    if (n % 2 == 0)
      return binomial(p + k, k) * binomial(n, k) +
             binomial(p + k - 1, k) * binomial(n - 2, k - 2);
    return binomial(p + k, k) * binomial(n - 2, k) +
           binomial(p + k - 1, k - 1) * binomial(n - 2, k - 2);
  }
  if (d % 2 == 1) {
    if (k % d != 0) return 0;
    const Int lead = binomial((p + 1 + k) / d - 1, k / d);
    if (n % d == 0)
      return lead * (binomial(n / d, k / d) + binomial(n / d - 1, k / d - 1));
    return lead * binomial((n - 2) / d, k / d);
  }
  if ((2 * k) % d != 0) return 0;
  const Int lead = binomial((2 * p + 2 + 2 * k) / d - 1, 2 * k / d);
  if (n % d == 0)
    return lead *
           (binomial(2 * n / d, 2 * k / d) + binomial(2 * n / d - 1, 2 * k / d - 1));
  return lead * binomial(2 * (n - 2) / d, 2 * k / d);
}

Int closed_form_i2(int s, int a, int k, int d) {
  const long long N = static_cast<long long>(s) * a + 2;
  if (k == 0) return 1;
  if (k == 1) {
    if (a % 2 == 1) return 0;   // single vertex orbit
    return d == 2 ? Int(N) : Int(0);
  }
  if (d >= 3) return 0;
  // d == 2
  if (a % 2 == 1) return Int(N) / 2;  // requires s even for 2 | N
  return Int(N) * (s + 1) / 2;
}

}  // namespace

Int closed_form_eval(const ComplexType& t, int k, RootOfUnitySpec spec) {
  const int d = spec.d;
  if (t.group_order() % d != 0)
    throw std::invalid_argument("d does not divide the group order");
  if (k < 0 || k > t.max_k())
    throw std::out_of_range("k out of range for " + t.str());
  if (d == 1) return face_count(t, k);
  switch (t.family) {
    case Family::A: return closed_form_a(t.s, t.n, k, d);
    case Family::B: return closed_form_b(t.s, t.n, k, d);
    case Family::D: return closed_form_d(t.s, t.n, k, d);
    case Family::I2: return closed_form_i2(t.s, t.n, k, d);
  }
  throw std::logic_error("bad family");
}

}  // namespace csl
