#include "gdua/cyclo.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <numeric>

namespace gdua {

namespace {

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exact division of integer polynomials; remainder is asserted zero.
std::vector<Integer> exact_div(std::vector<Integer> num,
                               const std::vector<Integer>& den) {
  assert(!den.empty() && den.back() == 1);  // divisors here are monic
  std::vector<Integer> quot(num.size() - den.size() + 1, Integer(0));
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer q = num[i + den.size() - 1];
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
  }
  for (const Integer& c : num) {
    assert(c == 0);
    (void)c;
  }
  return quot;
}

// Per-ambient-order arithmetic tables, built once and shared.
struct Context {
  unsigned n = 1;
  unsigned phi = 1;
  std::vector<Integer> phi_poly;            // Phi_n, monic
  std::vector<std::vector<Rational>> rows;  // rows[j] = x^(phi+j) mod Phi_n
};

const Context& context(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<Context>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto ctx = std::make_unique<Context>();
  ctx->n = n;
  ctx->phi_poly = cyclotomic_polynomial(n);
  ctx->phi = static_cast<unsigned>(ctx->phi_poly.size() - 1);

  // x^phi mod Phi = -(lower part of Phi); then shift-and-reduce repeatedly.
  // Rows cover every exponent products or embeddings can produce.
  unsigned phi = ctx->phi;
  unsigned max_exp = std::max(2 * phi >= 2 ? 2 * phi - 2 : 0, n >= 1 ? n - 1 : 0);
  if (max_exp >= phi) {
    std::vector<Rational> row(phi);
    for (unsigned i = 0; i < phi; ++i) row[i] = -Rational(ctx->phi_poly[i]);
    ctx->rows.push_back(row);
    for (unsigned e = phi + 1; e <= max_exp; ++e) {
      const std::vector<Rational>& prev = ctx->rows.back();
      std::vector<Rational> next(phi, Rational(0));
      for (unsigned i = 0; i + 1 < phi; ++i) next[i + 1] = prev[i];
      if (prev[phi - 1] != 0) {
        const std::vector<Rational>& top = ctx->rows.front();
        for (unsigned i = 0; i < phi; ++i) next[i] += prev[phi - 1] * top[i];
      }
      ctx->rows.push_back(std::move(next));
    }
  }
  const Context& ref = *ctx;
  cache.emplace(n, std::move(ctx));
  return ref;
}

// Reduce a raw coefficient vector (any length) into the power basis.
std::vector<Rational> reduce(const Context& ctx, std::vector<Rational> v) {
  for (std::size_t j = v.size(); j-- > ctx.phi;) {
    if (v[j] == 0) continue;
    const std::vector<Rational>& row = ctx.rows.at(j - ctx.phi);
    for (unsigned i = 0; i < ctx.phi; ++i) v[i] += v[j] * row[i];
    v[j] = 0;
  }
  v.resize(ctx.phi);
  return v;
}

std::size_t poly_degree(const std::vector<Rational>& p) {
  std::size_t d = p.size();
  while (d > 0 && p[d - 1] == 0) --d;
  return d;  // number of coefficients; 0 means zero polynomial
}

// Euclidean division in Q[x], returns quotient, num becomes the remainder.
std::vector<Rational> poly_divmod(std::vector<Rational>& num,
                                  const std::vector<Rational>& den) {
  std::size_t dn = poly_degree(num), dd = poly_degree(den);
  assert(dd > 0);
  if (dn < dd) return {};
  std::vector<Rational> quot(dn - dd + 1, Rational(0));
  const Rational& lead = den[dd - 1];
  for (std::size_t i = quot.size(); i-- > 0;) {
    Rational q = num[i + dd - 1] / lead;
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < dd; ++j) num[i + j] -= q * den[j];
  }
  return quot;
}

}  // namespace

unsigned totient(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
  assert(n >= 1);
  if (n == 1) return {Integer(-1), Integer(1)};  // x - 1
  // Phi_n = (x^n - 1) / prod over proper divisors d of Phi_d.
  std::vector<Integer> p(n + 1, Integer(0));
  p[0] = -1;
  p[n] = 1;
  for (unsigned d : divisors(n)) {
    if (d == n) continue;
    p = exact_div(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

unsigned lcm_order(unsigned a, unsigned b) {
  return a / std::gcd(a, b) * b;
}

CycloNumber::CycloNumber() : ambient_(1), c_(1, Rational(0)) {}

CycloNumber::CycloNumber(unsigned ambient)
    : ambient_(ambient), c_(context(ambient).phi, Rational(0)) {}

CycloNumber CycloNumber::zero(unsigned ambient) { return CycloNumber(ambient); }

CycloNumber CycloNumber::one(unsigned ambient) {
  CycloNumber x(ambient);
  x.c_[0] = 1;
  return x;
}

CycloNumber CycloNumber::from_rational(const Rational& q, unsigned ambient) {
  CycloNumber x(ambient);
  x.c_[0] = q;
  return x;
}

CycloNumber CycloNumber::root_of_unity(unsigned ambient, long long exponent) {
  const Context& ctx = context(ambient);
  long long e = exponent % static_cast<long long>(ambient);
  if (e < 0) e += ambient;
  std::vector<Rational> raw(static_cast<std::size_t>(e) + 1, Rational(0));
  raw.back() = 1;
  CycloNumber x(ambient);
  x.c_ = reduce(ctx, std::move(raw));
  return x;
}

bool CycloNumber::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& q) { return q == 0; });
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

Rational CycloNumber::rational_value() const {
  assert(is_rational());
  return c_[0];
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber x(*this);
  for (Rational& q : x.c_) q = -q;
  return x;
}

CycloNumber CycloNumber::operator+(const CycloNumber& rhs) const {
  if (ambient_ != rhs.ambient_) throw AmbientOrderMismatch(ambient_, rhs.ambient_);
  CycloNumber x(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) x.c_[i] += rhs.c_[i];
  return x;
}

CycloNumber CycloNumber::operator-(const CycloNumber& rhs) const {
  if (ambient_ != rhs.ambient_) throw AmbientOrderMismatch(ambient_, rhs.ambient_);
  CycloNumber x(*this);
  for (std::size_t i = 0; i < c_.size(); ++i) x.c_[i] -= rhs.c_[i];
  return x;
}

CycloNumber CycloNumber::operator*(const CycloNumber& rhs) const {
  if (ambient_ != rhs.ambient_) throw AmbientOrderMismatch(ambient_, rhs.ambient_);
  const Context& ctx = context(ambient_);
  std::vector<Rational> conv(2 * ctx.phi, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      if (rhs.c_[j] == 0) continue;
      conv[i + j] += c_[i] * rhs.c_[j];
    }
  }
  CycloNumber x(ambient_);
  x.c_ = reduce(ctx, std::move(conv));
  return x;
}

CycloNumber CycloNumber::scaled(const Rational& q) const {
  CycloNumber x(*this);
  for (Rational& c : x.c_) c *= q;
  return x;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const Context& ctx = context(ambient_);
  // Extended Euclid against Phi_N: s*this + t*Phi = r, with r ending constant
  // because Phi_N is irreducible over Q and deg(this) < phi(N).
  std::vector<Rational> r0(ctx.phi_poly.size());
  for (std::size_t i = 0; i < r0.size(); ++i) r0[i] = Rational(ctx.phi_poly[i]);
  std::vector<Rational> r1 = c_;
  std::vector<Rational> s0 = {Rational(0)}, s1 = {Rational(1)};
  while (poly_degree(r1) > 1) {  // until r1 is constant
    std::vector<Rational> q = poly_divmod(r0, r1);  // r0 <- r0 mod r1
    std::swap(r0, r1);                              // (r0, r1) = (r1, rem)
    // (s0, s1) = (s1, s0 - q*s1), preserving s_i * this == r_i (mod Phi).
    std::vector<Rational> qs(q.size() + s1.size(), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    }
    if (s0.size() < qs.size()) s0.resize(qs.size(), Rational(0));
    for (std::size_t i = 0; i < qs.size(); ++i) s0[i] -= qs[i];
    std::swap(s0, s1);
  }
  assert(poly_degree(r1) == 1 && r1[0] != 0);  // nonzero constant gcd
  CycloNumber x(ambient_);
  std::vector<Rational> inv = reduce(ctx, std::move(s1));
  for (std::size_t i = 0; i < inv.size(); ++i) x.c_[i] = inv[i] / r1[0];
  return x;
}

CycloNumber CycloNumber::operator/(const CycloNumber& rhs) const {
  return *this * rhs.inverse();
}

CycloNumber CycloNumber::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloNumber acc = CycloNumber::one(ambient_);
  CycloNumber base(*this);
  unsigned long long k = static_cast<unsigned long long>(e);
  while (k > 0) {
    if (k & 1ull) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

CycloNumber CycloNumber::embedded(unsigned ambient) const {
  if (ambient == ambient_) return *this;
  if (ambient % ambient_ != 0) throw OrderNotDivisible(ambient_, ambient);
  const Context& ctx = context(ambient);
  unsigned step = ambient / ambient_;
  std::vector<Rational> raw(ctx.n, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    raw[i * step] += c_[i];
  }
  CycloNumber x(ambient);
  x.c_ = reduce(ctx, std::move(raw));
  return x;
}

bool CycloNumber::operator==(const CycloNumber& rhs) const {
  if (ambient_ == rhs.ambient_) return c_ == rhs.c_;
  unsigned m = lcm_order(ambient_, rhs.ambient_);
  return embedded(m).c_ == rhs.embedded(m).c_;
}

}  // namespace gdua
