#include "gdua/poly.hpp"

#include <cassert>

namespace gdua {

void Poly::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const CycloNumber& c) {
  Poly p(c.ambient_order());
  p.c_.push_back(c);
  p.strip();
  return p;
}

Poly Poly::constant(const Rational& q, unsigned ambient) {
  return constant(CycloNumber::from_rational(q, ambient));
}

Poly Poly::monomial(const CycloNumber& c, unsigned e) {
  Poly p(c.ambient_order());
  if (c.is_zero()) return p;
  p.c_.assign(e + 1, CycloNumber::zero(c.ambient_order()));
  p.c_[e] = c;
  return p;
}

Poly Poly::h(unsigned ambient) {
  return monomial(CycloNumber::one(ambient), 1);
}

Poly Poly::from_coefficients(std::vector<CycloNumber> coeffs, unsigned ambient) {
  Poly p(ambient);
  p.c_ = std::move(coeffs);
  for (CycloNumber& c : p.c_) c = c.embedded(ambient);
  p.strip();
  return p;
}

std::optional<unsigned> Poly::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<unsigned>(c_.size() - 1);
}

std::vector<unsigned> Poly::support() const {
  std::vector<unsigned> s;
  for (unsigned i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) s.push_back(i);
  }
  return s;
}

CycloNumber Poly::coeff(unsigned i) const {
  if (i >= c_.size()) return CycloNumber::zero(ambient_);
  return c_[i];
}

Poly Poly::operator-() const {
  Poly p(*this);
  for (CycloNumber& c : p.c_) c = -c;
  return p;
}

Poly Poly::operator+(const Poly& rhs) const {
  if (ambient_ != rhs.ambient_) throw AmbientOrderMismatch(ambient_, rhs.ambient_);
  Poly p(ambient_);
  p.c_.resize(std::max(c_.size(), rhs.c_.size()), CycloNumber::zero(ambient_));
  for (std::size_t i = 0; i < p.c_.size(); ++i) {
    if (i < c_.size()) p.c_[i] += c_[i];
    if (i < rhs.c_.size()) p.c_[i] += rhs.c_[i];
  }
  p.strip();
  return p;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + (-rhs); }

Poly Poly::operator*(const Poly& rhs) const {
  if (ambient_ != rhs.ambient_) throw AmbientOrderMismatch(ambient_, rhs.ambient_);
  Poly p(ambient_);
  if (c_.empty() || rhs.c_.empty()) return p;
  p.c_.assign(c_.size() + rhs.c_.size() - 1, CycloNumber::zero(ambient_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j].is_zero()) continue;
      p.c_[i + j] += c_[i] * rhs.c_[j];
    }
  }
  p.strip();
  return p;
}

Poly Poly::scaled(const CycloNumber& c) const {
  if (c.ambient_order() != ambient_)
    throw AmbientOrderMismatch(ambient_, c.ambient_order());
  Poly p(*this);
  for (CycloNumber& x : p.c_) x *= c;
  p.strip();
  return p;
}

Poly Poly::scaled(const Rational& q) const {
  Poly p(*this);
  for (CycloNumber& x : p.c_) x = x.scaled(q);
  p.strip();
  return p;
}

bool Poly::operator==(const Poly& rhs) const {
  if (ambient_ == rhs.ambient_) {
    if (c_.size() != rhs.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != rhs.c_[i]) return false;
    }
    return true;
  }
  unsigned m = lcm_order(ambient_, rhs.ambient_);
  return embedded(m) == rhs.embedded(m);
}

CycloNumber Poly::eval(const CycloNumber& x) const {
  unsigned m = lcm_order(ambient_, x.ambient_order());
  CycloNumber xx = x.embedded(m);
  CycloNumber acc = CycloNumber::zero(m);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * xx + c_[i].embedded(m);
  }
  return acc;
}

Poly Poly::compose_affine(const CycloNumber& a, const CycloNumber& b) const {
  unsigned m = lcm_order(ambient_, lcm_order(a.ambient_order(), b.ambient_order()));
  Poly arg = Poly::monomial(a.embedded(m), 1) + Poly::constant(b.embedded(m));
  Poly acc(m);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc = acc * arg + Poly::constant(c_[i].embedded(m));
  }
  return acc;
}

bool Poly::has_root_other_than(const CycloNumber& w) const {
  if (is_zero()) throw ZeroPolynomial();
  // Shift so w moves to the origin: roots other than w survive as roots
  // other than 0, and "only root is 0" means "monomial".
  Poly shifted = compose_affine(CycloNumber::one(w.ambient_order()), w);
  return !shifted.is_monomial();
}

Poly Poly::embedded(unsigned ambient) const {
  if (ambient == ambient_) return *this;
  Poly p(ambient);
  p.c_.reserve(c_.size());
  for (const CycloNumber& c : c_) p.c_.push_back(c.embedded(ambient));
  p.strip();
  return p;
}

Poly Poly::shifted_down(unsigned j) const {
  if (j == 0) return *this;
  Poly p(ambient_);
  if (c_.size() <= j) {
    assert(is_zero());
    return p;
  }
  for (std::size_t i = 0; i < j; ++i) {
    assert(c_[i].is_zero());
    (void)i;
  }
  p.c_.assign(c_.begin() + j, c_.end());
  p.strip();
  return p;
}

}  // namespace gdua
