#pragma once

#include <optional>
#include <vector>

#include "gdua/classify.hpp"
#include "gdua/conformal.hpp"
#include "gdua/pbw.hpp"

// Shared fixtures and independently coded reference oracles. Everything here
// recomputes results either from definitions or by brute force so the library
// under test is never used as its own oracle.
namespace gdua::support {

inline std::vector<MonomialScalar> grid_scalars() {
  using M = MonomialScalar;
  return {
      M::one(),
      M::from_rational(-1),
      M::root_of_unity(3, 1),
      M::root_of_unity(4, 1),
      M::root_of_unity(6, 1),
      M::from_rational(2),
      M::from_rational(Rational(1, 2)),
      M::from_rational(3),
      M::make(2, 3, 1),
      M::from_rational(8),
      M::from_rational(4),
      M::from_rational(-2),
  };
}

inline std::vector<Poly> grid_polys() {
  Poly h = Poly::h(1);
  Poly one = Poly::constant(Rational(1));
  return {Poly::zero(1),  one,           h,
          h * h,          h * h * h,     h - one,
          h * (h - one),  (h - one) * (h - one), h * h + h};
}

inline std::vector<CycloNumber> grid_gammas() {
  return {CycloNumber::zero(1), CycloNumber::one(1)};
}

struct GridPoint {
  Poly f;
  MonomialScalar r, s;
  CycloNumber gamma;
};

inline const std::vector<GridPoint>& full_grid() {
  static const std::vector<GridPoint> grid = [] {
    std::vector<GridPoint> g;
    for (const Poly& f : grid_polys()) {
      for (const MonomialScalar& r : grid_scalars()) {
        for (const MonomialScalar& s : grid_scalars()) {
          for (const CycloNumber& gamma : grid_gammas()) {
            g.push_back({f, r, s, gamma});
          }
        }
      }
    }
    return g;
  }();
  return grid;
}

// Reference conformality predicate, assembled from its three regime
// characterizations rather than from the linear solver:
//   gamma = 0:          conformal iff s != r^i for every i in supp(f);
//   gamma != 0, r != 1: substitute f((h+gamma)/(r-1)) and recurse;
//   gamma != 0, r = 1:  always conformal.
inline bool conformal_reference(const Poly& f, const MonomialScalar& r,
                                const MonomialScalar& s,
                                const CycloNumber& gamma) {
  if (f.is_zero()) return true;
  if (gamma.is_zero()) {
    for (unsigned i : f.support()) {
      if (s == r.pow(static_cast<long long>(i))) return false;
    }
    return true;
  }
  if (!r.is_one()) {
    unsigned amb = lcm_order(f.ambient_order(),
                             lcm_order(gamma.ambient_order(), r.root_order()));
    CycloNumber denom = r.to_cyclo(amb) - CycloNumber::one(amb);
    Poly ft = f.compose_affine(denom.inverse(), gamma.embedded(amb) / denom);
    return conformal_reference(ft, r, s, CycloNumber::zero(1));
  }
  return true;
}

// P_k by the defining sum: P_k(h) = sum_{i=0}^{k-1} s^i f(r^{-i} h).
inline Poly p_k_sum(const Poly& f, const MonomialScalar& r,
                    const MonomialScalar& s, unsigned k) {
  unsigned amb = lcm_order(f.ambient_order(),
                           lcm_order(r.root_order(), s.root_order()));
  Poly acc = Poly::zero(amb);
  for (unsigned i = 0; i < k; ++i) {
    CycloNumber ri = r.pow(-static_cast<long long>(i)).to_cyclo(amb);
    Poly part = f.compose_affine(ri, CycloNumber::zero(amb));
    acc = acc + part.scaled(s.pow(i).to_cyclo(amb));
  }
  return acc;
}

// P_k coefficient by coefficient: the h^m term is a_m * k when s = r^m and
// a_m * ((s r^{-m})^k - 1)/((s r^{-m}) - 1) otherwise. The root order of
// s * r^{-m} always divides lcm(order r, order s), so one ambient suffices.
inline Poly p_k_coefficient_formula(const Poly& f, const MonomialScalar& r,
                                    const MonomialScalar& s, unsigned k) {
  unsigned amb = lcm_order(f.ambient_order(),
                           lcm_order(r.root_order(), s.root_order()));
  Poly fe = f.embedded(amb);
  Poly acc = Poly::zero(amb);
  for (unsigned m : fe.support()) {
    MonomialScalar q = s * r.pow(-static_cast<long long>(m));
    CycloNumber cm;
    if (q.is_one()) {
      cm = fe.coeff(m).scaled(Rational(k));
    } else {
      CycloNumber qc = q.to_cyclo(amb);
      cm = fe.coeff(m) * (qc.pow(k) - CycloNumber::one(amb)) /
           (qc - CycloNumber::one(amb));
    }
    acc = acc + Poly::monomial(cm, m);
  }
  return acc;
}

// Conformal closed form (gamma = 0): P_k = s^k g(r^{1-k} h) - g(r h).
inline std::optional<Poly> p_k_witness_formula(const Poly& f,
                                               const MonomialScalar& r,
                                               const MonomialScalar& s,
                                               unsigned k) {
  auto cw = conformal_witness(f, r, s, CycloNumber::zero(1));
  if (!cw) return std::nullopt;
  const Poly& g = cw->g;
  unsigned amb = lcm_order(g.ambient_order(),
                           lcm_order(r.root_order(), s.root_order()));
  CycloNumber zero = CycloNumber::zero(amb);
  Poly first = g.compose_affine(r.pow(1 - static_cast<long long>(k)).to_cyclo(amb), zero)
                   .scaled(s.pow(k).to_cyclo(amb));
  Poly second = g.compose_affine(r.to_cyclo(amb), zero);
  return first.embedded(amb) - second.embedded(amb);
}

// Membership of (a, b) in the lattice spanned by 0, 1 or 2 HNF rows.
inline bool in_lattice(const std::vector<std::array<Integer, 2>>& basis,
                       const Integer& a, const Integer& b) {
  if (basis.empty()) return a == 0 && b == 0;
  if (basis.size() == 1) {
    const Integer& p = basis[0][0];
    const Integer& q = basis[0][1];
    if (p != 0) {
      if (a % p != 0) return false;
      Integer t = a / p;
      return t * q == b;
    }
    return a == 0 && (q != 0 && b % q == 0);
  }
  const Integer& p = basis[0][0];
  const Integer& q = basis[0][1];
  const Integer& c = basis[1][1];
  if (p == 0 || c == 0) return false;  // not a valid rank-2 HNF
  if (a % p != 0) return false;
  Integer t1 = a / p;
  Integer rem = b - t1 * q;
  return rem % c == 0;
}

// Exhaustive search for a torsion element r^a s^b (a nontrivial root of
// unity) with |a|, |b| <= range.
inline bool torsion_witness_in_range(const MonomialScalar& r,
                                     const MonomialScalar& s, int range) {
  for (int a = -range; a <= range; ++a) {
    for (int b = -range; b <= range; ++b) {
      if (a == 0 && b == 0) continue;
      MonomialScalar g = r.pow(a) * s.pow(b);
      if (!g.is_one() && g.is_root_of_unity()) return true;
    }
  }
  return false;
}

inline CycloNumber scalar_value_cyclo(const ScalarValue& v) {
  if (std::holds_alternative<MonomialScalar>(v)) {
    const MonomialScalar& m = std::get<MonomialScalar>(v);
    return m.to_cyclo(m.root_order());
  }
  return std::get<CycloNumber>(v);
}

inline bool scalar_values_equal(const ScalarValue& a, const ScalarValue& b) {
  return scalar_value_cyclo(a) == scalar_value_cyclo(b);
}

}  // namespace gdua::support
