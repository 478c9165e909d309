#include "csl/numbers.hpp"

#include <sstream>

namespace csl {

Int binomial(long long a, long long b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  Int r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;  // exact at each step
  }
  return r;
}

int QuadExt::sign() const {
  if (b == 0) return a == 0 ? 0 : (a > 0 ? 1 : -1);
  if (a == 0) return b > 0 ? 1 : -1;
  // a and b nonzero: compare a^2 vs 5 b^2 keeping track of which side wins.
  const bool apos = a > 0;
  const bool bpos = b > 0;
  if (apos && bpos) return 1;
  if (!apos && !bpos) return -1;
  const Rat a2 = a * a;
  const Rat b2 = 5 * b * b;
  if (a2 == b2) return 0;
  const bool rational_part_bigger = a2 > b2;
  if (apos) return rational_part_bigger ? 1 : -1;
  return rational_part_bigger ? -1 : 1;
}

std::string QuadExt::str() const {
  std::ostringstream os;
  if (b == 0) {
    os << a;
  } else {
    os << a << "+" << b << "*sqrt5";
  }
  return os.str();
}

}  // namespace csl
