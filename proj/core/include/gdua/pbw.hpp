#pragma once

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <optional>

#include "gdua/conformal.hpp"
#include "gdua/poly.hpp"
#include "gdua/scalar.hpp"

namespace gdua {

/**
 * A presentation of the algebra on generators d, u, h with relations
 *   d h = r h d - gamma d,
 *   h u = r u h - gamma u,
 *   d u = s u d - f(h).
 *
 * r and s are nonzero by construction, so the algebra is a Noetherian domain.
 * f and gamma are embedded once into the common ambient order; all element
 * arithmetic happens there.
 */
class Presentation {
 public:
  Presentation(Poly f, MonomialScalar r, MonomialScalar s, CycloNumber gamma);

  static std::shared_ptr<const Presentation> create(Poly f, MonomialScalar r,
                                                    MonomialScalar s,
                                                    CycloNumber gamma);

  const Poly& f() const { return f_; }
  const MonomialScalar& r() const { return r_; }
  const MonomialScalar& s() const { return s_; }
  const CycloNumber& gamma() const { return gamma_; }
  unsigned ambient_order() const { return ambient_; }
  bool gamma_is_zero() const { return gamma_.is_zero(); }

  bool operator==(const Presentation& rhs) const;

 private:
  Poly f_;
  MonomialScalar r_;
  MonomialScalar s_;
  CycloNumber gamma_;
  unsigned ambient_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// Exponents of a normal-form monomial u^a h^b d^c.
struct Mono {
  unsigned u = 0, h = 0, d = 0;
  auto operator<=>(const Mono&) const = default;
};

/**
 * Element of the algebra in the normal form sum c_m * u^a h^b d^c.
 *
 * Products rewrite against the defining relations; the reduction terminates
 * because each step strictly lowers the number of d-u inversions, and the
 * result is confluent (exercised, not assumed, by the test suite).
 */
class AlgebraElement {
 public:
  explicit AlgebraElement(PresentationPtr pres) : pres_(std::move(pres)) {}

  static AlgebraElement zero(PresentationPtr pres);
  static AlgebraElement one(PresentationPtr pres);
  static AlgebraElement u(PresentationPtr pres);
  static AlgebraElement h(PresentationPtr pres);
  static AlgebraElement d(PresentationPtr pres);
  static AlgebraElement monomial(PresentationPtr pres, Mono m,
                                 const CycloNumber& coeff);
  /// p(h) as an element.
  static AlgebraElement from_h_poly(PresentationPtr pres, const Poly& p);

  const PresentationPtr& presentation() const { return pres_; }
  const std::map<Mono, CycloNumber>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  AlgebraElement operator-() const;
  AlgebraElement operator+(const AlgebraElement& rhs) const;
  AlgebraElement operator-(const AlgebraElement& rhs) const;
  AlgebraElement operator*(const AlgebraElement& rhs) const;
  AlgebraElement scaled(const CycloNumber& c) const;
  AlgebraElement pow(unsigned e) const;

  bool operator==(const AlgebraElement& rhs) const;
  bool operator!=(const AlgebraElement& rhs) const { return !(*this == rhs); }

 private:
  void add_term(const Mono& m, const CycloNumber& c);
  void check_same(const AlgebraElement& rhs) const;

  PresentationPtr pres_;
  std::map<Mono, CycloNumber> terms_;

  friend AlgebraElement rmul_u(const AlgebraElement& x);
};

/// Z-grading with deg u = 1, deg d = -1, deg h = 0: Some(n) iff homogeneous.
/// ZeroElement for the zero element.
std::optional<long> grading_degree(const AlgebraElement& x);

/**
 * q-centrality certificate: Some(lambda_u, lambda_h, lambda_d) iff
 *   u*x = lambda_u*x*u,  h*x = lambda_h*x*h,  d*x = lambda_d*x*d
 * for scalars solved from one nonzero coefficient and then verified exactly.
 * A sufficient condition for normality. ZeroElement for the zero element.
 */
std::optional<std::array<CycloNumber, 3>> q_commutation_check(
    const AlgebraElement& x);

/// Exact check of d u^k = s^k u^k d - P_k(h) u^{k-1} (gamma = 0 only;
/// NotApplicable otherwise).
bool check_power_identity(const PresentationPtr& pres, unsigned k);

/// Dense square matrix over a cyclotomic field; just enough for the
/// finite-dimensional representations.
class CycloMatrix {
 public:
  CycloMatrix(unsigned n, unsigned ambient);
  static CycloMatrix identity(unsigned n, unsigned ambient);

  unsigned size() const { return n_; }
  unsigned ambient_order() const { return ambient_; }
  CycloNumber& at(unsigned i, unsigned j) { return a_[i * n_ + j]; }
  const CycloNumber& at(unsigned i, unsigned j) const { return a_[i * n_ + j]; }

  CycloMatrix operator+(const CycloMatrix& rhs) const;
  CycloMatrix operator-(const CycloMatrix& rhs) const;
  CycloMatrix operator*(const CycloMatrix& rhs) const;
  CycloMatrix scaled(const CycloNumber& c) const;
  CycloMatrix pow(unsigned e) const;
  bool is_zero() const;
  bool operator==(const CycloMatrix& rhs) const;

  /// p(M) by Horner.
  static CycloMatrix apply_poly(const Poly& p, const CycloMatrix& m);

 private:
  unsigned n_;
  unsigned ambient_;
  std::vector<CycloNumber> a_;
};

/// The k-dimensional module V_lambda / M_lambda in matrix form.
struct MatrixRep {
  unsigned dim = 0;
  CycloNumber lambda;
  CycloMatrix d, u, h;
  MatrixRep(unsigned k, unsigned ambient)
      : dim(k), lambda(CycloNumber::zero(ambient)), d(k, ambient),
        u(k, ambient), h(k, ambient) {}
};

/**
 * Matrices of d, u, h acting on the basis v_0..v_{k-1} of V_lambda/M_lambda:
 *   h v_m = r^m lambda v_m, u v_m = v_{m+1} (v_{k-1} -> 0),
 *   d v_m = -P_m(r^{m-1} lambda) v_{m-1}, d v_0 = 0.
 *
 * Preconditions (checked; PreconditionViolated says which failed):
 * P_m(r^{m-1} lambda) != 0 for 0 < m < k, and P_k(r^{k-1} lambda) = 0.
 * Defined for gamma = 0 only (NotApplicable otherwise). The defining
 * relations and d^k = u^k = 0 are re-verified on the matrices.
 */
MatrixRep v_lambda_rep(const PresentationPtr& pres, const CycloNumber& lambda,
                       unsigned k);

}  // namespace gdua
