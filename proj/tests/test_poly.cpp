#include "doctest.h"

#include "gdua/errors.hpp"
#include "gdua/poly.hpp"

#include <optional>
#include <vector>

using namespace gdua;

namespace {

const Poly kH = Poly::h(1);
const Poly kOne = Poly::constant(Rational(1));

}  // namespace

TEST_CASE("polynomial arithmetic and evaluation") {
  Poly p = (kH - kOne) * (kH - kOne);
  CHECK(p.degree() == std::optional<unsigned>(2));
  CHECK(p.coeff(0) == CycloNumber::one(1));
  CHECK(p.coeff(1) == CycloNumber::from_rational(Rational(-2)));
  CHECK(p.coeff(2) == CycloNumber::one(1));
  CHECK(p.eval(CycloNumber::from_rational(Rational(3))) == CycloNumber::from_rational(Rational(4)));
  CHECK(p.eval(CycloNumber::one(1)).is_zero());

  CHECK((p - p).is_zero());
  CHECK(Poly::zero(1).degree() == std::nullopt);
  CHECK(p.scaled(Rational(2)).coeff(1) == CycloNumber::from_rational(Rational(-4)));

  // Cyclotomic scaling requires a matching ambient; embed the polynomial first.
  CHECK_THROWS_AS(p.scaled(CycloNumber::root_of_unity(3, 1)), AmbientOrderMismatch);
  Poly p3 = p.embedded(3).scaled(CycloNumber::root_of_unity(3, 1));
  CHECK(p3.ambient_order() == 3);
  CHECK(p3.coeff(2) == CycloNumber::root_of_unity(3, 1));
}

TEST_CASE("affine substitution") {
  Poly p = (kH - kOne) * (kH - kOne);
  // p(2h + 1) = (2h)^2 = 4h^2.
  Poly q = p.compose_affine(CycloNumber::from_rational(Rational(2)), CycloNumber::one(1));
  CHECK(q == Poly::monomial(CycloNumber::from_rational(Rational(4)), 2));

  // Substitution with a cyclotomic slope lifts the ambient order.
  Poly r = kH.compose_affine(CycloNumber::root_of_unity(4, 1), CycloNumber::zero(1));
  CHECK(r == Poly::monomial(CycloNumber::root_of_unity(4, 1), 1));

  // Identity substitution.
  CHECK(p.compose_affine(CycloNumber::one(1), CycloNumber::zero(1)) == p);
}

TEST_CASE("support, monomial predicate and embedding") {
  Poly p = Poly::monomial(CycloNumber::one(3), 2) +
           Poly::monomial(CycloNumber::root_of_unity(3, 1), 1);
  CHECK(p.support() == std::vector<unsigned>{1, 2});
  CHECK(!p.is_monomial());
  CHECK(kH.is_monomial());
  CHECK(kOne.is_monomial());
  CHECK(!Poly::zero(1).is_monomial());
  CHECK(!(kH + kOne).is_monomial());

  Poly e = p.embedded(6);
  CHECK(e.ambient_order() == 6);
  CHECK(e == p);
  CHECK_THROWS_AS(p.embedded(4), OrderNotDivisible);

  CHECK(p.shifted_down(1) ==
        Poly::monomial(CycloNumber::one(3), 1) +
            Poly::constant(CycloNumber::root_of_unity(3, 1)));
}

TEST_CASE("root detection away from a distinguished point") {
  Poly square = (kH - kOne) * (kH - kOne);
  CHECK_FALSE(square.has_root_other_than(CycloNumber::one(1)));
  CHECK(square.has_root_other_than(CycloNumber::zero(1)));

  CHECK_FALSE((kH * kH * kH).has_root_other_than(CycloNumber::zero(1)));
  CHECK((kH * (kH - kOne)).has_root_other_than(CycloNumber::zero(1)));
  CHECK((kH * (kH - kOne)).has_root_other_than(CycloNumber::one(1)));

  // Nonzero constants have no roots at all.
  CHECK_FALSE(kOne.has_root_other_than(CycloNumber::zero(1)));
  CHECK_THROWS_AS(Poly::zero(1).has_root_other_than(CycloNumber::zero(1)), ZeroPolynomial);

  // The distinguished point can live in a larger ambient than the polynomial.
  CHECK_FALSE((kH - kOne).has_root_other_than(CycloNumber::one(6)));
}

TEST_CASE("arithmetic demands matching ambients; embedding reconciles them") {
  Poly a = Poly::monomial(CycloNumber::root_of_unity(4, 1), 1);
  Poly b = Poly::monomial(CycloNumber::root_of_unity(6, 1), 1);
  CHECK_THROWS_AS(a * b, AmbientOrderMismatch);
  CHECK_THROWS_AS(a + b, AmbientOrderMismatch);
  CHECK_THROWS_AS(a - b, AmbientOrderMismatch);

  Poly a12 = a.embedded(12);
  Poly b12 = b.embedded(12);
  Poly prod = a12 * b12;
  CHECK(prod.ambient_order() == 12);
  CHECK(prod.coeff(2) == CycloNumber::root_of_unity(12, 5));
  CHECK(a12 + b12 == b12 + a12);

  // Equality and evaluation reconcile ambients on their own.
  CHECK(a == a12);
  CHECK(a.eval(CycloNumber::root_of_unity(3, 1)) == CycloNumber::root_of_unity(12, 7));
}
