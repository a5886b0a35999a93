#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "gdua/cyclo.hpp"
#include "gdua/errors.hpp"
#include "gdua/rational.hpp"

namespace gdua {

/**
 * Nonzero scalar of the shape q * zeta_n^k with q a positive rational.
 *
 * Canonical form: q > 0, and either k = 0 with n = 1, or gcd(k, n) = 1 with
 * 0 < k < n. Negative rational inputs fold their sign into the root of unity
 * (-1 = zeta_2), so -1/2 * zeta_3^2 canonicalizes to 1/2 * zeta_6.
 *
 * This is the exact multiplicative domain the classification needs: powers,
 * products and root-of-unity tests never leave it.
 */
class MonomialScalar {
 public:
  /// q as a plain scalar; ZeroScalar if q = 0.
  static MonomialScalar from_rational(const Rational& q);
  /// zeta_n^k (any k, canonicalized).
  static MonomialScalar root_of_unity(unsigned n, long long k);
  /// q * zeta_n^k; ZeroScalar if q = 0.
  static MonomialScalar make(const Rational& q, unsigned n, long long k);
  static MonomialScalar one() { return from_rational(1); }

  const Rational& q() const { return q_; }
  unsigned root_order() const { return n_; }
  unsigned root_exponent() const { return k_; }

  bool is_one() const { return q_ == 1 && n_ == 1; }
  bool is_rational() const { return n_ == 1; }
  /// Some(order) iff the scalar is a root of unity (q = 1).
  std::optional<unsigned> is_root_of_unity() const;

  MonomialScalar operator*(const MonomialScalar& rhs) const;
  MonomialScalar operator/(const MonomialScalar& rhs) const;
  MonomialScalar inverse() const;
  MonomialScalar pow(long long e) const;

  bool operator==(const MonomialScalar& rhs) const = default;

  /// Value in Q(zeta_ambient); requires root_order() | ambient.
  CycloNumber to_cyclo(unsigned ambient) const;

 private:
  MonomialScalar(Rational q, unsigned n, unsigned k) : q_(std::move(q)), n_(n), k_(k) {}

  Rational q_;  // > 0
  unsigned n_;  // >= 1
  unsigned k_;  // canonical exponent
};

/// Embedding of a monomial scalar into a cyclotomic field.
CycloNumber embed(const MonomialScalar& m, unsigned ambient);

/// Recognize a cyclotomic number as q * zeta_n^k when possible.
std::optional<MonomialScalar> try_to_monomial(const CycloNumber& v);

/// A scalar as parsed from user input: monomial when recognizable.
using ScalarValue = std::variant<MonomialScalar, CycloNumber>;

/// Generators of the relation lattice {(a, b) : r^a s^b = 1} in Hermite
/// normal form (0 to 2 rows).
std::vector<std::array<Integer, 2>> relation_lattice(const MonomialScalar& r,
                                                     const MonomialScalar& s);

/**
 * Invariants of the multiplicative group <r, s>.
 *
 * tau is the least i > 0 with s^i a power of r (0 when none exists), and
 * epsilon satisfies s^tau = r^epsilon. When r is a root of unity epsilon is
 * only defined modulo its order; the smallest nonnegative representative is
 * reported.
 */
struct GroupStructure {
  std::vector<std::array<Integer, 2>> lattice_basis;
  int group_rank = 0;  // rank of <r, s> = 2 - rank of the lattice
  bool torsionfree = false;
  Integer tau;
  Integer epsilon;
  std::optional<unsigned> r_order;
  std::optional<unsigned> s_order;
};

GroupStructure group_structure(const MonomialScalar& r, const MonomialScalar& s);

}  // namespace gdua
