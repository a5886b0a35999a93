#pragma once

#include <optional>

#include "gdua/poly.hpp"
#include "gdua/scalar.hpp"

namespace gdua {

/// Witness g for conformality: s*g(h) - g(r*h - gamma) = f(h).
struct ConformalWitness {
  Poly g;
};

/**
 * Decide whether f is conformal for the parameters (r, s, gamma) and produce
 * the witness polynomial when it is.
 *
 * The defining identity is linear in the coefficients of g; a degree bound of
 * deg f + 1 suffices in every solvable case. The system is upper triangular
 * with diagonal entries s - r^i; singular diagonals turn into consistency
 * constraints, and free coordinates are pinned to zero so the witness is
 * deterministic. The returned witness is re-verified exactly.
 */
std::optional<ConformalWitness> conformal_witness(const Poly& f,
                                                  const MonomialScalar& r,
                                                  const MonomialScalar& s,
                                                  const CycloNumber& gamma);

bool is_conformal(const Poly& f, const MonomialScalar& r,
                  const MonomialScalar& s, const CycloNumber& gamma);

/// Split of f into conformal and non-conformal parts (gamma = 0 setting):
/// f_nc collects the terms a_i h^i with s = r^i, and f_nc = h^j * F with
/// j = min supp(f_nc).
struct NcDecomposition {
  Poly f_c;
  Poly f_nc;
  unsigned j = 0;
  Poly big_f;
};

/// NotApplicable when f is conformal (f_nc = 0).
NcDecomposition nc_decomposition(const Poly& f, const MonomialScalar& r,
                                 const MonomialScalar& s);

/// P_k(h) = sum_{i=0}^{k-1} s^i f(r^ic h) with r^ic = r^{-i}; P_0 = 0.
struct PkData {
  unsigned k = 0;
  Poly p;
};

PkData p_k(const Poly& f, const MonomialScalar& r, const MonomialScalar& s,
           unsigned k);

/**
 * Least k > 0 with P_k = 0, or nullopt when every P_k is nonzero.
 *
 * Exists iff s * r^{-m} is a root of unity different from 1 for every m in
 * the support of f; then k is the lcm of those orders.
 * ZeroPolynomial when f = 0.
 */
std::optional<unsigned> minimal_vanishing_k(const Poly& f,
                                            const MonomialScalar& r,
                                            const MonomialScalar& s);

/**
 * Whether the algebra admits principal eigenvector data in the two regimes
 * where the notion is defined: gamma = 0 (answer: tau > 0) and r = 1 with
 * gamma != 0 (answer: s is a root of unity). NotApplicable elsewhere.
 */
bool has_principal_eigenvector(const MonomialScalar& r, const MonomialScalar& s,
                               const CycloNumber& gamma);

}  // namespace gdua
