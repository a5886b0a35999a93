#include "gdua/rational.hpp"

#include <cassert>

namespace gdua {

std::vector<std::pair<Integer, unsigned>> factorize(Integer n) {
  assert(n != 0);
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, unsigned>> out;
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool rational_sqrt(const Rational& q, Rational& out) {
  if (q < 0) return false;
  if (q == 0) {
    out = 0;
    return true;
  }
  Integer n = numerator(q), d = denominator(q);
  Integer rn = boost::multiprecision::sqrt(n);
  Integer rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  out = Rational(rn, rd);
  return true;
}

}  // namespace gdua
