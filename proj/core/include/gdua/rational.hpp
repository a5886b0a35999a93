#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

namespace gdua {

// Arbitrary-precision exact arithmetic. cpp_rational keeps the canonical form
// the rest of the library relies on: gcd(num, den) = 1 and den > 0.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

inline Integer lcm(const Integer& a, const Integer& b) {
  return boost::multiprecision::lcm(a, b);
}

/// Prime factorization by trial division; exponents of distinct primes.
/// Intended for the small integers that appear in scalar inputs.
std::vector<std::pair<Integer, unsigned>> factorize(Integer n);

/// Some(sqrt) when q is the square of a rational, otherwise nullopt-like flag.
bool rational_sqrt(const Rational& q, Rational& out);

}  // namespace gdua
