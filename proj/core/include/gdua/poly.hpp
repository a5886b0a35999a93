#pragma once

#include <optional>
#include <vector>

#include "gdua/cyclo.hpp"
#include "gdua/scalar.hpp"

namespace gdua {

/**
 * Polynomial in one variable h over a cyclotomic field Q(zeta_N).
 *
 * Dense representation, trailing zeros stripped, every coefficient carried in
 * the polynomial's own ambient order. Binary operations require equal ambient
 * orders; equality compares values across orders.
 */
class Poly {
 public:
  explicit Poly(unsigned ambient = 1) : ambient_(ambient) {}
  static Poly zero(unsigned ambient = 1) { return Poly(ambient); }
  static Poly constant(const CycloNumber& c);
  static Poly constant(const Rational& q, unsigned ambient = 1);
  /// c * h^e.
  static Poly monomial(const CycloNumber& c, unsigned e);
  static Poly h(unsigned ambient = 1);
  static Poly from_coefficients(std::vector<CycloNumber> coeffs, unsigned ambient);

  unsigned ambient_order() const { return ambient_; }
  bool is_zero() const { return c_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<unsigned> degree() const;
  bool is_constant() const { return c_.size() <= 1; }
  /// Exponents with nonzero coefficient, ascending.
  std::vector<unsigned> support() const;
  /// Exactly one term; false for the zero polynomial.
  bool is_monomial() const { return support().size() == 1; }
  /// Coefficient of h^i (zero beyond the degree).
  CycloNumber coeff(unsigned i) const;

  Poly operator-() const;
  Poly operator+(const Poly& rhs) const;
  Poly operator-(const Poly& rhs) const;
  Poly operator*(const Poly& rhs) const;
  Poly scaled(const CycloNumber& c) const;
  Poly scaled(const Rational& q) const;

  bool operator==(const Poly& rhs) const;
  bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

  CycloNumber eval(const CycloNumber& x) const;

  /// p(a*h + b), computed by Horner so it stays exact.
  Poly compose_affine(const CycloNumber& a, const CycloNumber& b) const;

  /// True iff p has a root different from w (in any field extension):
  /// false exactly when p(h + w) is a monomial. ZeroPolynomial when p = 0.
  bool has_root_other_than(const CycloNumber& w) const;

  Poly embedded(unsigned ambient) const;
  /// Divide by h^j; pre: every exponent in the support is >= j.
  Poly shifted_down(unsigned j) const;

 private:
  void strip();

  unsigned ambient_;
  std::vector<CycloNumber> c_;
};

}  // namespace gdua
