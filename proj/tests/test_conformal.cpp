#include "doctest.h"

#include "gdua/conformal.hpp"
#include "gdua/errors.hpp"
#include "support.hpp"

#include <optional>

using namespace gdua;

namespace {

MonomialScalar M(long long n) { return MonomialScalar::from_rational(Rational(n)); }
const MonomialScalar kOne = MonomialScalar::one();
const CycloNumber kZero = CycloNumber::zero(1);

// f must equal s*g(h) - g(r*h - gamma) exactly for a valid witness.
bool witness_identity_holds(const Poly& f, const MonomialScalar& r,
                            const MonomialScalar& s, const CycloNumber& gamma,
                            const Poly& g) {
  unsigned amb = lcm_order(
      lcm_order(f.ambient_order(), g.ambient_order()),
      lcm_order(lcm_order(r.root_order(), s.root_order()), gamma.ambient_order()));
  Poly ge = g.embedded(amb);
  Poly lhs = ge.scaled(s.to_cyclo(amb)) -
             ge.compose_affine(r.to_cyclo(amb), -gamma.embedded(amb));
  return lhs == f;
}

}  // namespace

TEST_CASE("conformal witnesses for pinned inputs") {
  // f = h, r = 2, s = 3: g = h, since 3h - 2h = h.
  auto cw = conformal_witness(Poly::h(1), M(2), M(3), kZero);
  REQUIRE(cw.has_value());
  CHECK(cw->g == Poly::h(1));

  // f = h, r = s = 1, gamma = 1: g = (h^2 + h)/2.
  auto cw2 = conformal_witness(Poly::h(1), kOne, kOne, CycloNumber::one(1));
  REQUIRE(cw2.has_value());
  Poly expect = (Poly::h(1) * Poly::h(1) + Poly::h(1)).scaled(Rational(1, 2));
  CHECK(cw2->g == expect);
  CHECK(witness_identity_holds(Poly::h(1), kOne, kOne, CycloNumber::one(1), cw2->g));

  // f = h, r = s = 1, gamma = 0: h = g(h) - g(h) is unsolvable.
  CHECK(!conformal_witness(Poly::h(1), kOne, kOne, kZero).has_value());
  CHECK(!is_conformal(Poly::h(1), kOne, kOne, kZero));

  // The zero polynomial is trivially conformal with witness 0.
  auto cw0 = conformal_witness(Poly::zero(1), kOne, kOne, kZero);
  REQUIRE(cw0.has_value());
  CHECK(cw0->g.is_zero());
}

TEST_CASE("conformality agrees with the regime characterization on the grid") {
  for (const auto& gp : support::full_grid()) {
    bool expected = support::conformal_reference(gp.f, gp.r, gp.s, gp.gamma);
    CHECK(is_conformal(gp.f, gp.r, gp.s, gp.gamma) == expected);
    auto cw = conformal_witness(gp.f, gp.r, gp.s, gp.gamma);
    CHECK(cw.has_value() == expected);
    if (cw) {
      CHECK(witness_identity_holds(gp.f, gp.r, gp.s, gp.gamma, cw->g));
    }
  }
}

TEST_CASE("non-conformal decomposition") {
  Poly h = Poly::h(1);
  Poly one = Poly::constant(Rational(1));

  // f = h^2 + h with r = 2, s = 4: the h^2 term collides with s = r^2.
  auto nd = nc_decomposition(h * h + h, M(2), M(4));
  CHECK(nd.f_c == h);
  CHECK(nd.f_nc == h * h);
  CHECK(nd.j == 2);
  CHECK(nd.big_f == one);
  CHECK(nd.f_c + nd.f_nc == h * h + h);

  // f = h^3 + h^2 with r = 1, s = 1: everything collides, F = h + 1.
  auto nd2 = nc_decomposition(h * h * h + h * h, kOne, kOne);
  CHECK(nd2.f_c.is_zero());
  CHECK(nd2.j == 2);
  CHECK(nd2.big_f == h + one);

  CHECK_THROWS_AS(nc_decomposition(h, M(2), M(3)), NotApplicable);
}

TEST_CASE("P_k pinned value and three-way agreement") {
  // P_2 for f = h, r = 2, s = 3: f(h) + 3 f(h/2) = (5/2) h.
  PkData pk = p_k(Poly::h(1), M(2), M(3), 2);
  CHECK(pk.k == 2);
  CHECK(pk.p == Poly::h(1).scaled(Rational(5, 2)));
  CHECK(p_k(Poly::h(1), M(2), M(3), 0).p.is_zero());

  auto z3 = MonomialScalar::root_of_unity(3, 1);
  auto z4 = MonomialScalar::root_of_unity(4, 1);
  Poly h = Poly::h(1);
  Poly one = Poly::constant(Rational(1));
  struct Case {
    Poly f;
    MonomialScalar r, s;
  };
  const Case cases[] = {
      {h, M(2), M(3)},
      {h * h + h, z3, M(2)},
      {(h - one) * (h - one), z4, z3},
      {h * h * h, kOne, M(-2)},
      {one, M(2), kOne},
      {h, z3, kOne},
  };
  for (const auto& c : cases) {
    for (unsigned k = 0; k <= 6; ++k) {
      Poly engine = p_k(c.f, c.r, c.s, k).p;
      CHECK(engine == support::p_k_sum(c.f, c.r, c.s, k));
      CHECK(engine == support::p_k_coefficient_formula(c.f, c.r, c.s, k));
      auto via_witness = support::p_k_witness_formula(c.f, c.r, c.s, k);
      if (via_witness) CHECK(engine == *via_witness);
    }
  }
}

TEST_CASE("minimal vanishing index") {
  auto z3 = MonomialScalar::root_of_unity(3, 1);
  CHECK(minimal_vanishing_k(Poly::h(1), z3, kOne) == std::optional<unsigned>(3));
  CHECK(minimal_vanishing_k(Poly::h(1), M(2), M(3)) == std::nullopt);
  CHECK(minimal_vanishing_k(Poly::h(1), kOne, kOne) == std::nullopt);
  CHECK_THROWS_AS(minimal_vanishing_k(Poly::zero(1), M(2), M(3)), ZeroPolynomial);

  // Dual route across the scalar grid: the returned k is the first index at
  // which the defining sum vanishes, and absence means no vanishing in a
  // window twice the largest order the grid can produce.
  for (const auto& f : support::grid_polys()) {
    if (f.is_zero()) continue;
    for (const auto& r : support::grid_scalars()) {
      for (const auto& s : support::grid_scalars()) {
        auto k = minimal_vanishing_k(f, r, s);
        if (k) {
          CHECK(support::p_k_sum(f, r, s, *k).is_zero());
          for (unsigned j = 1; j < *k; ++j) {
            CHECK(!support::p_k_sum(f, r, s, j).is_zero());
          }
        } else {
          for (unsigned j = 1; j <= 8; ++j) {
            CHECK(!support::p_k_sum(f, r, s, j).is_zero());
          }
        }
      }
    }
  }
}

TEST_CASE("principal eigenvector predicate") {
  CHECK(has_principal_eigenvector(M(2), M(8), kZero));
  CHECK(!has_principal_eigenvector(M(2), M(3), kZero));
  CHECK(has_principal_eigenvector(kOne, MonomialScalar::root_of_unity(3, 1),
                                  CycloNumber::one(1)));
  CHECK(!has_principal_eigenvector(kOne, M(2), CycloNumber::one(1)));
  CHECK_THROWS_AS(has_principal_eigenvector(M(2), M(3), CycloNumber::one(1)),
                  NotApplicable);
}
