#include "csl/qpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace csl {

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::constant(Int v) {
  QPolynomial p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

QPolynomial QPolynomial::monomial(Int v, int exp) {
  QPolynomial p;
  if (v != 0) {
    p.c_.assign(exp + 1, Int(0));
    p.c_[exp] = std::move(v);
  }
  return p;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  QPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  QPolynomial r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
  r.trim();
  return r;
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  QPolynomial r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.trim();
  return r;
}

QPolynomial QPolynomial::shifted(int exp) const {
  if (is_zero() || exp == 0) return *this;
  if (exp < 0) throw std::invalid_argument("negative shift");
  QPolynomial r;
  r.c_.assign(c_.size() + exp, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + exp] = c_[i];
  return r;
}

QPolynomial QPolynomial::substitute_power(int e) const {
  if (e < 1) throw std::invalid_argument("substitution power must be >= 1");
  if (e == 1 || is_zero()) return *this;
  QPolynomial r;
  r.c_.assign((c_.size() - 1) * e + 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i * e] = c_[i];
  return r;
}

QPolynomial QPolynomial::exact_div(const QPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::logic_error("division by zero polynomial");
  if (is_zero()) return {};
  if (degree() < divisor.degree())
    throw std::logic_error("non-exact polynomial division (degree)");
  std::vector<Int> rem = c_;
  std::vector<Int> quot(c_.size() - divisor.c_.size() + 1, Int(0));
  const Int& lead = divisor.c_.back();
  for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
    Int top = rem[i + divisor.degree()];
    if (top == 0) continue;
    if (top % lead != 0)
      throw std::logic_error("non-exact polynomial division (leading term)");
    Int f = top / lead;
    quot[i] = f;
    for (size_t j = 0; j < divisor.c_.size(); ++j)
      rem[i + j] -= f * divisor.c_[j];
  }
  for (const Int& v : rem)
    if (v != 0) throw std::logic_error("non-exact polynomial division");
  return QPolynomial(std::move(quot));
}

QPolynomial QPolynomial::rem_monic(const QPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.c_.back() != 1)
    throw std::logic_error("rem_monic requires a monic divisor");
  std::vector<Int> rem = c_;
  const int dd = divisor.degree();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i] == 0) continue;
    Int f = rem[i];
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor.c_[j];
  }
  rem.resize(std::min<size_t>(rem.size(), dd));
  return QPolynomial(std::move(rem));
}

Int QPolynomial::value_at_one() const {
  Int s = 0;
  for (const Int& v : c_) s += v;
  return s;
}

bool QPolynomial::palindromic() const {
  for (size_t i = 0, j = c_.size(); i < j; ++i)
    if (c_[i] != c_[c_.size() - 1 - i]) return false;
  return true;
}

bool QPolynomial::nonnegative() const {
  for (const Int& v : c_)
    if (v < 0) return false;
  return true;
}

std::vector<Int> QPolynomial::residues_mod_qn_minus_1(int N) const {
  std::vector<Int> r(N, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i % N] += c_[i];
  return r;
}

std::string QPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Int v = c_[i];
    if (first) {
      if (v < 0) os << "-", v = -v;
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    if (i == 0)
      os << v;
    else {
      if (v != 1) os << v << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

QPolynomial q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int of negative n");
  return QPolynomial(std::vector<Int>(n, Int(1)));
}

QPolynomial q_factorial(int n) {
  QPolynomial p = QPolynomial::constant(1);
  for (int i = 1; i <= n; ++i) p *= q_int(i);
  return p;
}

QPolynomial gauss_binomial(int m, int k, int base) {
  if (base != 1 && base != 2)
    throw std::invalid_argument("gauss_binomial base must be 1 or 2");
  if (k < 0 || k > m) return {};
  if (k > m - k) k = m - k;
  // Pascal recurrence [m k] = [m-1 k-1] + q^k [m-1 k], row by row.
  std::vector<QPolynomial> row(k + 1);
  row[0] = QPolynomial::constant(1);
  for (int i = 1; i <= m; ++i)
    for (int j = std::min(i, k); j >= 1; --j)
      row[j] = row[j - 1] + row[j].shifted(j);
  QPolynomial r = row[k];
  return base == 2 ? r.substitute_power(2) : r;
}

QPolynomial gauss_binomial_by_division(int m, int k) {
  if (k < 0 || k > m) return {};
  QPolynomial num = QPolynomial::constant(1);
  for (int i = m - k + 1; i <= m; ++i) num *= q_int(i);
  return num.exact_div(q_factorial(k));
}

namespace {

// q^d - 1 divided by the cyclotomic polynomials of the proper divisors.
const QPolynomial& cyclotomic_locked(int d, std::map<int, QPolynomial>& cache) {
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  std::vector<Int> qd(d + 1, Int(0));
  qd[0] = -1;
  qd[d] = 1;
  QPolynomial p{std::move(qd)};
  for (int e = 1; e < d; ++e)
    if (d % e == 0) p = p.exact_div(cyclotomic_locked(e, cache));
  return cache.emplace(d, std::move(p)).first->second;
}

}  // namespace

const QPolynomial& cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  static std::map<int, QPolynomial> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_locked(d, cache);
}

Int eval_at_primitive_root(const QPolynomial& p, RootOfUnitySpec spec) {
  if (spec.d == 1) return p.value_at_one();
  QPolynomial r = p.rem_monic(cyclotomic(spec.d));
  if (r.degree() > 0)
    throw NonConstantRemainder("value at a primitive " +
                               std::to_string(spec.d) +
                               "-th root of unity is not well defined");
  return r.coeff(0);
}

Int q_lucas(int m, int k, RootOfUnitySpec spec) {
  const int d = spec.d;
  if (d < 2) throw std::invalid_argument("q_lucas requires d >= 2");
  if (k < 0 || k > m) return 0;
  const int a = m / d, b = m % d;
  const int r = k / d, s = k % d;
  Int outer = binomial(a, r);
  if (outer == 0) return 0;
  return outer * eval_at_primitive_root(gauss_binomial(b, s), spec);
}

}  // namespace csl
