#pragma once

#include <memory>
#include <vector>

#include "gdua/errors.hpp"
#include "gdua/rational.hpp"

namespace gdua {

/// Dense coefficient vector of the N-th cyclotomic polynomial, monic,
/// constant term first.
std::vector<Integer> cyclotomic_polynomial(unsigned n);

/// Euler totient.
unsigned totient(unsigned n);

/**
 * Element of the cyclotomic field Q(zeta_N), stored as the canonical
 * representative mod Phi_N in the power basis 1, zeta, ..., zeta^(phi(N)-1).
 *
 * Arithmetic requires both operands to share the ambient order N; use
 * embedded() to move into a larger field first. Equality is value equality
 * and lifts both sides into the least common ambient order.
 */
class CycloNumber {
 public:
  CycloNumber();  // zero in ambient order 1
  static CycloNumber zero(unsigned ambient = 1);
  static CycloNumber one(unsigned ambient = 1);
  static CycloNumber from_rational(const Rational& q, unsigned ambient = 1);
  /// zeta_N^k as an element of Q(zeta_N).
  static CycloNumber root_of_unity(unsigned ambient, long long exponent);

  unsigned ambient_order() const { return ambient_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const;
  /// True when the value lies in Q (all basis coefficients above 1 vanish).
  bool is_rational() const;
  /// The value as a Rational; pre: is_rational().
  Rational rational_value() const;

  CycloNumber operator-() const;
  CycloNumber operator+(const CycloNumber& rhs) const;
  CycloNumber operator-(const CycloNumber& rhs) const;
  CycloNumber operator*(const CycloNumber& rhs) const;
  CycloNumber operator/(const CycloNumber& rhs) const;  // DivisionByZero
  CycloNumber& operator+=(const CycloNumber& rhs) { return *this = *this + rhs; }
  CycloNumber& operator-=(const CycloNumber& rhs) { return *this = *this - rhs; }
  CycloNumber& operator*=(const CycloNumber& rhs) { return *this = *this * rhs; }

  CycloNumber scaled(const Rational& q) const;
  CycloNumber inverse() const;  // DivisionByZero
  CycloNumber pow(long long e) const;

  /// Image under Q(zeta_N) -> Q(zeta_M), zeta_N |-> zeta_M^(M/N).
  /// Requires N | M, else OrderNotDivisible.
  CycloNumber embedded(unsigned ambient) const;

  bool operator==(const CycloNumber& rhs) const;
  bool operator!=(const CycloNumber& rhs) const { return !(*this == rhs); }

 private:
  explicit CycloNumber(unsigned ambient);

  unsigned ambient_;
  std::vector<Rational> c_;  // size totient(ambient_)
};

inline CycloNumber operator*(const Rational& q, const CycloNumber& x) {
  return x.scaled(q);
}

/// Least common multiple of two ambient orders.
unsigned lcm_order(unsigned a, unsigned b);

}  // namespace gdua
