#include "gdua/pbw.hpp"

#include <cassert>

namespace gdua {

namespace {

// sigma^m acting on polynomials in h: p |-> p(r^m h - gamma_m), with
// gamma_m = gamma * (r^{m-1} + ... + 1). sigma is the automorphism the
// relations twist by: d p(h) = sigma(p)(h) d and p(h) u = u sigma(p)(h).
Poly sigma_pow(const Presentation& pres, const Poly& p, unsigned m) {
  unsigned ambient = pres.ambient_order();
  CycloNumber scale = pres.r().pow(m).to_cyclo(ambient);
  CycloNumber shift = CycloNumber::zero(ambient);
  CycloNumber rpow = CycloNumber::one(ambient);
  for (unsigned i = 0; i < m; ++i) {
    shift += rpow;
    rpow *= pres.r().to_cyclo(ambient);
  }
  shift = shift * pres.gamma();
  return p.compose_affine(scale, -shift);
}

Poly h_power(unsigned e, unsigned ambient) {
  return Poly::monomial(CycloNumber::one(ambient), e);
}

}  // namespace

Presentation::Presentation(Poly f, MonomialScalar r, MonomialScalar s,
                           CycloNumber gamma)
    : r_(std::move(r)), s_(std::move(s)) {
  ambient_ = lcm_order(lcm_order(f.ambient_order(), gamma.ambient_order()),
                       lcm_order(r_.root_order(), s_.root_order()));
  f_ = f.embedded(ambient_);
  gamma_ = gamma.embedded(ambient_);
}

PresentationPtr Presentation::create(Poly f, MonomialScalar r, MonomialScalar s,
                                     CycloNumber gamma) {
  return std::make_shared<const Presentation>(std::move(f), std::move(r),
                                              std::move(s), std::move(gamma));
}

bool Presentation::operator==(const Presentation& rhs) const {
  return f_ == rhs.f_ && r_ == rhs.r_ && s_ == rhs.s_ && gamma_ == rhs.gamma_;
}

void AlgebraElement::add_term(const Mono& m, const CycloNumber& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void AlgebraElement::check_same(const AlgebraElement& rhs) const {
  if (pres_ == rhs.pres_) return;
  if (!(*pres_ == *rhs.pres_)) throw PresentationMismatch();
}

AlgebraElement AlgebraElement::zero(PresentationPtr pres) {
  return AlgebraElement(std::move(pres));
}

AlgebraElement AlgebraElement::one(PresentationPtr pres) {
  return monomial(std::move(pres), Mono{0, 0, 0}, CycloNumber::one(1));
}

AlgebraElement AlgebraElement::u(PresentationPtr pres) {
  return monomial(std::move(pres), Mono{1, 0, 0}, CycloNumber::one(1));
}

AlgebraElement AlgebraElement::h(PresentationPtr pres) {
  return monomial(std::move(pres), Mono{0, 1, 0}, CycloNumber::one(1));
}

AlgebraElement AlgebraElement::d(PresentationPtr pres) {
  return monomial(std::move(pres), Mono{0, 0, 1}, CycloNumber::one(1));
}

AlgebraElement AlgebraElement::monomial(PresentationPtr pres, Mono m,
                                        const CycloNumber& coeff) {
  AlgebraElement x(std::move(pres));
  x.add_term(m, coeff.embedded(x.pres_->ambient_order()));
  return x;
}

AlgebraElement AlgebraElement::from_h_poly(PresentationPtr pres, const Poly& p) {
  AlgebraElement x(pres);
  Poly q = p.embedded(pres->ambient_order());
  for (unsigned i : q.support()) x.add_term(Mono{0, i, 0}, q.coeff(i));
  return x;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement x(pres_);
  for (const auto& [m, c] : terms_) x.terms_.emplace(m, -c);
  return x;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& rhs) const {
  check_same(rhs);
  AlgebraElement x(*this);
  for (const auto& [m, c] : rhs.terms_) x.add_term(m, c);
  return x;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& rhs) const {
  return *this + (-rhs);
}

AlgebraElement AlgebraElement::scaled(const CycloNumber& c) const {
  AlgebraElement x(pres_);
  CycloNumber cc = c.embedded(pres_->ambient_order());
  if (cc.is_zero()) return x;
  for (const auto& [m, coeff] : terms_) x.terms_.emplace(m, coeff * cc);
  return x;
}

namespace {

// x * u for a single normal-form term, recursing on the d-exponent:
//   u^a h^b u       = u^{a+1} sigma(h^b)
//   u^a h^b d^c u   = s (u^a h^b d^{c-1} u) d - u^a h^b sigma^{c-1}(f) d^{c-1}
AlgebraElement term_rmul_u(const PresentationPtr& pres, const Mono& m,
                           const CycloNumber& coeff) {
  const Presentation& p = *pres;
  unsigned ambient = p.ambient_order();
  AlgebraElement out = AlgebraElement::zero(pres);
  if (m.d == 0) {
    Poly moved = sigma_pow(p, h_power(m.h, ambient), 1);
    for (unsigned i : moved.support()) {
      out = out + AlgebraElement::monomial(pres, Mono{m.u + 1, i, 0},
                                           moved.coeff(i) * coeff);
    }
    return out;
  }
  // First summand: coeff * s * (u^a h^b d^{c-1} u) d.
  AlgebraElement inner =
      term_rmul_u(pres, Mono{m.u, m.h, m.d - 1},
                  coeff * p.s().to_cyclo(ambient));
  AlgebraElement shifted = AlgebraElement::zero(pres);
  for (const auto& [mm, cc] : inner.terms()) {
    shifted = shifted +
              AlgebraElement::monomial(pres, Mono{mm.u, mm.h, mm.d + 1}, cc);
  }
  out = out + shifted;
  // Second summand: -coeff * u^a h^b sigma^{c-1}(f)(h) d^{c-1}.
  Poly tail = sigma_pow(p, p.f(), m.d - 1);
  for (unsigned i : tail.support()) {
    out = out - AlgebraElement::monomial(pres, Mono{m.u, m.h + i, m.d - 1},
                                         tail.coeff(i) * coeff);
  }
  return out;
}

}  // namespace

AlgebraElement rmul_u(const AlgebraElement& x) {
  AlgebraElement out = AlgebraElement::zero(x.presentation());
  for (const auto& [m, c] : x.terms()) {
    out = out + term_rmul_u(x.presentation(), m, c);
  }
  return out;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& rhs) const {
  check_same(rhs);
  const PresentationPtr& pres = pres_;
  unsigned ambient = pres_->ambient_order();
  AlgebraElement out = AlgebraElement::zero(pres);
  for (const auto& [m2, c2] : rhs.terms_) {
    // this * u^a, one generator at a time.
    AlgebraElement acc = scaled(c2);
    for (unsigned i = 0; i < m2.u; ++i) acc = rmul_u(acc);
    // * h^b: u^x h^y d^z h^b = u^x h^y sigma^z(h^b) d^z.
    if (m2.h > 0) {
      AlgebraElement moved = AlgebraElement::zero(pres);
      for (const auto& [mm, cc] : acc.terms_) {
        Poly shifted = sigma_pow(*pres, h_power(m2.h, ambient), mm.d);
        for (unsigned i : shifted.support()) {
          moved = moved + AlgebraElement::monomial(
                              pres, Mono{mm.u, mm.h + i, mm.d},
                              shifted.coeff(i) * cc);
        }
      }
      acc = moved;
    }
    // * d^c just bumps the d-exponent in normal form.
    if (m2.d > 0) {
      AlgebraElement moved = AlgebraElement::zero(pres);
      for (const auto& [mm, cc] : acc.terms_) {
        moved = moved + AlgebraElement::monomial(
                            pres, Mono{mm.u, mm.h, mm.d + m2.d}, cc);
      }
      acc = moved;
    }
    out = out + acc;
  }
  return out;
}

AlgebraElement AlgebraElement::pow(unsigned e) const {
  AlgebraElement acc = AlgebraElement::one(pres_);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool AlgebraElement::operator==(const AlgebraElement& rhs) const {
  check_same(rhs);
  if (terms_.size() != rhs.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = rhs.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

std::optional<long> grading_degree(const AlgebraElement& x) {
  if (x.is_zero()) throw ZeroElement();
  std::optional<long> deg;
  for (const auto& [m, c] : x.terms()) {
    (void)c;
    long n = static_cast<long>(m.u) - static_cast<long>(m.d);
    if (!deg) {
      deg = n;
    } else if (*deg != n) {
      return std::nullopt;
    }
  }
  return deg;
}

namespace {

// Solve a = lambda * b exactly: lambda from the first nonzero coefficient of
// b, then full verification. b != 0 because the algebra is a domain.
std::optional<CycloNumber> scalar_quotient(const AlgebraElement& a,
                                           const AlgebraElement& b) {
  assert(!b.is_zero());
  const auto& [m0, c0] = *b.terms().begin();
  auto it = a.terms().find(m0);
  if (it == a.terms().end()) return std::nullopt;
  CycloNumber lambda = it->second / c0;
  if (a == b.scaled(lambda)) return lambda;
  return std::nullopt;
}

}  // namespace

std::optional<std::array<CycloNumber, 3>> q_commutation_check(
    const AlgebraElement& x) {
  if (x.is_zero()) throw ZeroElement();
  const PresentationPtr& pres = x.presentation();
  AlgebraElement u = AlgebraElement::u(pres);
  AlgebraElement h = AlgebraElement::h(pres);
  AlgebraElement d = AlgebraElement::d(pres);
  std::array<CycloNumber, 3> lambdas = {CycloNumber(), CycloNumber(),
                                        CycloNumber()};
  const AlgebraElement* gens[3] = {&u, &h, &d};
  for (int i = 0; i < 3; ++i) {
    std::optional<CycloNumber> lam = scalar_quotient(*gens[i] * x, x * *gens[i]);
    if (!lam) return std::nullopt;
    lambdas[static_cast<std::size_t>(i)] = *lam;
  }
  return lambdas;
}

bool check_power_identity(const PresentationPtr& pres, unsigned k) {
  if (!pres->gamma_is_zero()) {
    throw NotApplicable("power identity is stated for gamma = 0");
  }
  unsigned ambient = pres->ambient_order();
  AlgebraElement lhs =
      AlgebraElement::d(pres) * AlgebraElement::u(pres).pow(k);
  // s^k u^k d - P_k(h) u^{k-1}; normal order P_k(h) u^{k-1} = u^{k-1} sigma^{k-1}(P_k).
  AlgebraElement rhs = AlgebraElement::monomial(
      pres, Mono{k, 0, 1}, pres->s().pow(k).to_cyclo(ambient));
  if (k >= 1) {
    Poly pk = p_k(pres->f(), pres->r(), pres->s(), k).p.embedded(ambient);
    Poly moved = sigma_pow(*pres, pk, k - 1);
    for (unsigned i : moved.support()) {
      rhs = rhs - AlgebraElement::monomial(pres, Mono{k - 1, i, 0},
                                           moved.coeff(i));
    }
  }
  return lhs == rhs;
}

CycloMatrix::CycloMatrix(unsigned n, unsigned ambient)
    : n_(n), ambient_(ambient),
      a_(static_cast<std::size_t>(n) * n, CycloNumber::zero(ambient)) {}

CycloMatrix CycloMatrix::identity(unsigned n, unsigned ambient) {
  CycloMatrix m(n, ambient);
  for (unsigned i = 0; i < n; ++i) m.at(i, i) = CycloNumber::one(ambient);
  return m;
}

CycloMatrix CycloMatrix::operator+(const CycloMatrix& rhs) const {
  assert(n_ == rhs.n_ && ambient_ == rhs.ambient_);
  CycloMatrix m(n_, ambient_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + rhs.a_[i];
  return m;
}

CycloMatrix CycloMatrix::operator-(const CycloMatrix& rhs) const {
  assert(n_ == rhs.n_ && ambient_ == rhs.ambient_);
  CycloMatrix m(n_, ambient_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - rhs.a_[i];
  return m;
}

CycloMatrix CycloMatrix::operator*(const CycloMatrix& rhs) const {
  assert(n_ == rhs.n_ && ambient_ == rhs.ambient_);
  CycloMatrix m(n_, ambient_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned k = 0; k < n_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (unsigned j = 0; j < n_; ++j) {
        if (rhs.at(k, j).is_zero()) continue;
        m.at(i, j) += at(i, k) * rhs.at(k, j);
      }
    }
  }
  return m;
}

CycloMatrix CycloMatrix::scaled(const CycloNumber& c) const {
  CycloMatrix m(n_, ambient_);
  CycloNumber cc = c.embedded(ambient_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * cc;
  return m;
}

CycloMatrix CycloMatrix::pow(unsigned e) const {
  CycloMatrix acc = identity(n_, ambient_);
  for (unsigned i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool CycloMatrix::is_zero() const {
  for (const CycloNumber& c : a_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycloMatrix::operator==(const CycloMatrix& rhs) const {
  return n_ == rhs.n_ && ambient_ == rhs.ambient_ && a_ == rhs.a_;
}

CycloMatrix CycloMatrix::apply_poly(const Poly& p, const CycloMatrix& m) {
  CycloMatrix acc(m.size(), m.ambient_order());
  std::optional<unsigned> deg = p.degree();
  if (!deg) return acc;
  for (unsigned i = *deg + 1; i-- > 0;) {
    acc = acc * m;
    CycloNumber c = p.coeff(i).embedded(m.ambient_order());
    for (unsigned j = 0; j < m.size(); ++j) acc.at(j, j) += c;
  }
  return acc;
}

MatrixRep v_lambda_rep(const PresentationPtr& pres, const CycloNumber& lambda,
                       unsigned k) {
  if (!pres->gamma_is_zero()) {
    throw NotApplicable("V_lambda is constructed for gamma = 0");
  }
  if (k == 0) throw PreconditionViolated("k must be positive");
  unsigned ambient = lcm_order(pres->ambient_order(), lambda.ambient_order());
  CycloNumber lam = lambda.embedded(ambient);
  const MonomialScalar& r = pres->r();
  const MonomialScalar& s = pres->s();
  const Poly f = pres->f().embedded(ambient);

  // Weight of d on v_m is -P_m(r^{m-1} lambda).
  auto p_at = [&](unsigned m) {
    Poly pm = p_k(f, r, s, m).p;
    CycloNumber arg =
        r.pow(static_cast<long long>(m) - 1).to_cyclo(ambient) * lam;
    return pm.eval(arg).embedded(ambient);
  };
  for (unsigned m = 1; m < k; ++m) {
    if (p_at(m).is_zero()) {
      throw PreconditionViolated(
          "P_m(r^{m-1} lambda) = 0 for m = " + std::to_string(m) +
          " < k; k is not minimal");
    }
  }
  if (!p_at(k).is_zero()) {
    throw PreconditionViolated("P_k(r^{k-1} lambda) != 0 for k = " +
                               std::to_string(k));
  }

  MatrixRep rep(k, ambient);
  rep.lambda = lam;
  for (unsigned m = 0; m < k; ++m) {
    rep.h.at(m, m) = r.pow(m).to_cyclo(ambient) * lam;
    if (m + 1 < k) rep.u.at(m + 1, m) = CycloNumber::one(ambient);
    if (m >= 1) rep.d.at(m - 1, m) = -p_at(m);
  }

  // Defining relations and nilpotency, verified on the matrices.
  CycloNumber rc = r.to_cyclo(ambient), sc = s.to_cyclo(ambient);
  CycloNumber gm = pres->gamma().embedded(ambient);
  CycloMatrix rel1 =
      rep.d * rep.h - (rep.h * rep.d).scaled(rc) + rep.d.scaled(gm);
  CycloMatrix rel2 =
      rep.h * rep.u - (rep.u * rep.h).scaled(rc) + rep.u.scaled(gm);
  CycloMatrix rel3 = rep.d * rep.u - (rep.u * rep.d).scaled(sc) +
                     CycloMatrix::apply_poly(f, rep.h);
  if (!rel1.is_zero() || !rel2.is_zero() || !rel3.is_zero() ||
      !rep.d.pow(k).is_zero() || !rep.u.pow(k).is_zero()) {
    throw Error("V_lambda matrices failed relation verification");
  }
  return rep;
}

}  // namespace gdua
