#include "gdua/conformal.hpp"

#include <cassert>
#include <numeric>
#include <vector>

namespace gdua {

namespace {

// Binomial coefficients as exact integers.
Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc = acc * Integer(n - i) / Integer(i + 1);
  }
  return acc;
}

}  // namespace

std::optional<ConformalWitness> conformal_witness(const Poly& f,
                                                  const MonomialScalar& r,
                                                  const MonomialScalar& s,
                                                  const CycloNumber& gamma) {
  unsigned ambient = lcm_order(
      lcm_order(f.ambient_order(), gamma.ambient_order()),
      lcm_order(r.root_order(), s.root_order()));
  Poly ff = f.embedded(ambient);
  CycloNumber gm = gamma.embedded(ambient);
  CycloNumber sc = s.to_cyclo(ambient);

  if (ff.is_zero()) return ConformalWitness{Poly::zero(ambient)};

  // Coefficient of h^i in s*g(h) - g(r*h - gamma) for g = sum g_j h^j:
  //   (s - r^i) g_i - sum_{j > i} C(j, i) r^i (-gamma)^{j-i} g_j.
  // One extra degree of freedom (deg f + 1) covers the discrete
  // antiderivative needed when r = s = 1 and gamma != 0.
  unsigned dim = *ff.degree() + 2;  // unknowns g_0 .. g_{deg f + 1}
  std::vector<std::vector<CycloNumber>> m(
      dim, std::vector<CycloNumber>(dim + 1, CycloNumber::zero(ambient)));
  for (unsigned i = 0; i < dim; ++i) {
    m[i][i] = sc - r.pow(i).to_cyclo(ambient);
    CycloNumber neg_gamma_pow = CycloNumber::one(ambient);
    for (unsigned j = i + 1; j < dim; ++j) {
      neg_gamma_pow *= -gm;
      CycloNumber c = r.pow(i).to_cyclo(ambient).scaled(Rational(binomial(j, i)));
      m[i][j] = -(c * neg_gamma_pow);
    }
    m[i][dim] = ff.coeff(i);
  }

  // Exact row echelon over Q(zeta_ambient).
  std::vector<std::size_t> pivot_row_of_col(dim, dim);
  std::size_t next_row = 0;
  for (unsigned col = 0; col < dim && next_row < dim; ++col) {
    std::size_t sel = dim;
    for (std::size_t row = next_row; row < dim; ++row) {
      if (!m[row][col].is_zero()) {
        sel = row;
        break;
      }
    }
    if (sel == dim) continue;
    std::swap(m[next_row], m[sel]);
    CycloNumber inv = m[next_row][col].inverse();
    for (unsigned j = col; j <= dim; ++j) m[next_row][j] = m[next_row][j] * inv;
    for (std::size_t row = 0; row < dim; ++row) {
      if (row == next_row || m[row][col].is_zero()) continue;
      CycloNumber factor = m[row][col];
      for (unsigned j = col; j <= dim; ++j) {
        m[row][j] = m[row][j] - factor * m[next_row][j];
      }
    }
    pivot_row_of_col[col] = next_row;
    ++next_row;
  }
  // Inconsistent row: all-zero coefficients with nonzero right-hand side.
  for (std::size_t row = next_row; row < dim; ++row) {
    if (!m[row][dim].is_zero()) return std::nullopt;
  }

  // Free coordinates are pinned to zero, so g_col reads off the pivot row.
  std::vector<CycloNumber> g(dim, CycloNumber::zero(ambient));
  for (unsigned col = 0; col < dim; ++col) {
    if (pivot_row_of_col[col] != dim) g[col] = m[pivot_row_of_col[col]][dim];
  }
  Poly witness = Poly::from_coefficients(std::move(g), ambient);

  // The witness must reproduce f exactly; anything else is a solver bug.
  CycloNumber rc = r.to_cyclo(ambient);
  Poly lhs = witness.scaled(sc) - witness.compose_affine(rc, -gm);
  if (!(lhs == ff)) {
    throw Error("conformal witness failed exact re-verification");
  }
  return ConformalWitness{witness};
}

bool is_conformal(const Poly& f, const MonomialScalar& r,
                  const MonomialScalar& s, const CycloNumber& gamma) {
  return conformal_witness(f, r, s, gamma).has_value();
}

NcDecomposition nc_decomposition(const Poly& f, const MonomialScalar& r,
                                 const MonomialScalar& s) {
  NcDecomposition out;
  unsigned ambient = f.ambient_order();
  Poly fc(ambient), fnc(ambient);
  for (unsigned i : f.support()) {
    Poly term = Poly::monomial(f.coeff(i), i);
    if (r.pow(i) == s) {
      fnc = fnc + term;
    } else {
      fc = fc + term;
    }
  }
  if (fnc.is_zero()) {
    throw NotApplicable("f is conformal; no non-conformal part to extract");
  }
  out.f_c = fc;
  out.f_nc = fnc;
  out.j = fnc.support().front();
  out.big_f = fnc.shifted_down(out.j);
  return out;
}

PkData p_k(const Poly& f, const MonomialScalar& r, const MonomialScalar& s,
           unsigned k) {
  unsigned ambient = lcm_order(f.ambient_order(),
                               lcm_order(r.root_order(), s.root_order()));
  Poly acc(ambient);
  Poly ff = f.embedded(ambient);
  for (unsigned i = 0; i < k; ++i) {
    // s^i * f(r^{-i} h)
    CycloNumber scale = r.pow(-static_cast<long long>(i)).to_cyclo(ambient);
    Poly term = ff.compose_affine(scale, CycloNumber::zero(ambient));
    acc = acc + term.scaled(s.pow(i).to_cyclo(ambient));
  }
  return PkData{k, acc};
}

std::optional<unsigned> minimal_vanishing_k(const Poly& f,
                                            const MonomialScalar& r,
                                            const MonomialScalar& s) {
  if (f.is_zero()) throw ZeroPolynomial();
  unsigned long long k = 1;
  for (unsigned m : f.support()) {
    MonomialScalar t = s * r.pow(-static_cast<long long>(m));
    std::optional<unsigned> ord = t.is_root_of_unity();
    if (!ord || *ord == 1) return std::nullopt;  // t not a root of unity, or t = 1
    k = std::lcm(k, static_cast<unsigned long long>(*ord));
  }
  return static_cast<unsigned>(k);
}

bool has_principal_eigenvector(const MonomialScalar& r, const MonomialScalar& s,
                               const CycloNumber& gamma) {
  if (gamma.is_zero()) {
    return group_structure(r, s).tau > 0;
  }
  if (r.is_one()) {
    return s.is_root_of_unity().has_value();
  }
  throw NotApplicable(
      "principal eigenvector criterion is defined for gamma = 0 or r = 1");
}

}  // namespace gdua
