#include "gdua/scalar.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "gdua/lattice.hpp"

namespace gdua {

namespace {

// Canonicalize an angle num/den (in turns) to k/n with 0 <= k < n, gcd = 1.
void canonical_angle(Integer num, Integer den, unsigned& n_out, unsigned& k_out) {
  assert(den > 0);
  num %= den;
  if (num < 0) num += den;
  Integer g = gcd(num, den);
  if (g == 0) g = den;  // num == 0
  num /= g;
  den /= g;
  if (num == 0) den = 1;
  n_out = static_cast<unsigned>(den);
  k_out = static_cast<unsigned>(num);
}

}  // namespace

MonomialScalar MonomialScalar::from_rational(const Rational& q) {
  return make(q, 1, 0);
}

MonomialScalar MonomialScalar::root_of_unity(unsigned n, long long k) {
  return make(1, n, k);
}

MonomialScalar MonomialScalar::make(const Rational& q, unsigned n, long long k) {
  if (q == 0) throw ZeroScalar("monomial scalar must be nonzero");
  assert(n >= 1);
  Rational mag = q;
  Integer num = Integer(k) * 2;
  Integer den = Integer(n) * 2;
  if (mag < 0) {
    mag = -mag;
    num += Integer(n);  // fold -1 = zeta_2 into the angle
  }
  unsigned cn, ck;
  canonical_angle(num, den, cn, ck);
  return MonomialScalar(std::move(mag), cn, ck);
}

std::optional<unsigned> MonomialScalar::is_root_of_unity() const {
  if (q_ == 1) return n_;
  return std::nullopt;
}

MonomialScalar MonomialScalar::operator*(const MonomialScalar& rhs) const {
  Integer num = Integer(k_) * rhs.n_ + Integer(rhs.k_) * n_;
  Integer den = Integer(n_) * rhs.n_;
  unsigned cn, ck;
  canonical_angle(num, den, cn, ck);
  return MonomialScalar(q_ * rhs.q_, cn, ck);
}

MonomialScalar MonomialScalar::inverse() const {
  unsigned cn, ck;
  canonical_angle(Integer(n_) - Integer(k_), Integer(n_), cn, ck);
  return MonomialScalar(Rational(1) / q_, cn, ck);
}

MonomialScalar MonomialScalar::operator/(const MonomialScalar& rhs) const {
  return *this * rhs.inverse();
}

MonomialScalar MonomialScalar::pow(long long e) const {
  Rational qe = 1;
  Rational base = q_;
  long long a = e;
  if (a < 0) {
    base = Rational(1) / base;
    a = -a;
  }
  while (a > 0) {
    if (a & 1) qe *= base;
    base *= base;
    a >>= 1;
  }
  unsigned cn, ck;
  canonical_angle(Integer(k_) * e, Integer(n_), cn, ck);
  return MonomialScalar(std::move(qe), cn, ck);
}

CycloNumber MonomialScalar::to_cyclo(unsigned ambient) const {
  if (ambient % n_ != 0) throw OrderNotDivisible(n_, ambient);
  CycloNumber root =
      CycloNumber::root_of_unity(ambient, static_cast<long long>(k_) *
                                              (ambient / n_));
  return root.scaled(q_);
}

CycloNumber embed(const MonomialScalar& m, unsigned ambient) {
  return m.to_cyclo(ambient);
}

std::optional<MonomialScalar> try_to_monomial(const CycloNumber& v) {
  if (v.is_zero()) return std::nullopt;
  if (v.is_rational()) {
    return MonomialScalar::make(v.rational_value(), 1, 0);
  }
  // Roots of unity in Q(zeta_N) have order dividing N' = lcm(2, N).
  unsigned n = v.ambient_order();
  unsigned np = (n % 2 == 0) ? n : 2 * n;
  CycloNumber lifted = v.embedded(np);
  for (unsigned k = 0; k < np; ++k) {
    CycloNumber w = lifted * CycloNumber::root_of_unity(np, -static_cast<long long>(k));
    if (w.is_rational()) {
      Rational q = w.rational_value();
      if (q > 0) return MonomialScalar::make(q, np, k);
      // Negative hits are covered by k + np/2.
    }
  }
  return std::nullopt;
}

std::vector<std::array<Integer, 2>> relation_lattice(const MonomialScalar& r,
                                                     const MonomialScalar& s) {
  // r^a s^b = 1 splits into a rational-magnitude part (prime exponents) and
  // a root-of-unity part (one congruence mod M = lcm of the root orders).
  std::vector<Integer> primes;
  auto collect = [&primes](const Rational& q) {
    for (const Integer& part : {numerator(q), denominator(q)}) {
      for (const auto& [p, e] : factorize(part)) {
        (void)e;
        if (std::find(primes.begin(), primes.end(), p) == primes.end())
          primes.push_back(p);
      }
    }
  };
  collect(r.q());
  collect(s.q());
  std::sort(primes.begin(), primes.end());

  auto exponent_of = [](const Rational& q, const Integer& p) {
    Integer e = 0;
    Integer n = numerator(q);
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    Integer d = denominator(q);
    while (d % p == 0) {
      d /= p;
      --e;
    }
    return e;
  };

  // Kernel of (a, b, t) |-> (prime rows; c_r a + c_s b - M t) then projection.
  IntMat rows;
  for (const Integer& p : primes) {
    rows.push_back({exponent_of(r.q(), p), exponent_of(s.q(), p), Integer(0)});
  }
  unsigned m = lcm_order(r.root_order(), s.root_order());
  Integer cr = Integer(r.root_exponent()) * (m / r.root_order());
  Integer cs = Integer(s.root_exponent()) * (m / s.root_order());
  rows.push_back({cr, cs, -Integer(m)});

  IntMat kernel = integer_kernel(rows, 3);
  std::vector<std::array<Integer, 2>> generators;
  for (const IntVec& v : kernel) generators.push_back({v[0], v[1]});
  return hnf2(generators);
}

GroupStructure group_structure(const MonomialScalar& r, const MonomialScalar& s) {
  GroupStructure g;
  g.lattice_basis = relation_lattice(r, s);
  g.group_rank = 2 - static_cast<int>(g.lattice_basis.size());
  std::vector<Integer> divisors = snf_divisors(g.lattice_basis);
  g.torsionfree = std::all_of(divisors.begin(), divisors.end(),
                              [](const Integer& d) { return d == 1; });
  g.r_order = r.is_root_of_unity();
  g.s_order = s.is_root_of_unity();

  g.tau = 0;
  g.epsilon = 0;
  const auto& basis = g.lattice_basis;
  if (basis.size() == 1) {
    const Integer& b = basis[0][1];
    if (b != 0) {
      // (alpha, tau) is unique here: no lattice vector has second entry 0.
      g.tau = b > 0 ? b : Integer(-b);
      g.epsilon = b > 0 ? Integer(-basis[0][0]) : basis[0][0];
    }
  } else if (basis.size() == 2) {
    // Achievable second coordinates are gcd(b, c) Z for HNF [[a,b],[0,c]].
    const Integer &a = basis[0][0], &b = basis[0][1], &c = basis[1][1];
    Integer x = 0, y = 0;
    Integer t = boost::multiprecision::gcd(b, c);
    // Extended gcd by brute structure: solve x*b + y*c = t.
    {
      Integer old_r = b, rr = c, old_x = 1, xx = 0;
      while (rr != 0) {
        Integer q = old_r / rr;
        Integer tmp = old_r - q * rr;
        old_r = rr;
        rr = tmp;
        tmp = old_x - q * xx;
        old_x = xx;
        xx = tmp;
      }
      if (old_r < 0) {
        old_r = -old_r;
        old_x = -old_x;
      }
      assert(old_r == t);
      x = old_x;
      y = (c == 0) ? Integer(0) : (t - x * b) / c;
    }
    g.tau = t;
    g.epsilon = -x * a;
    // Full-rank lattice forces both scalars to be roots of unity, so epsilon
    // is only defined mod ord(r); report the least nonnegative representative.
    assert(g.r_order.has_value());
    if (g.r_order) {
      Integer ell = Integer(*g.r_order);
      g.epsilon %= ell;
      if (g.epsilon < 0) g.epsilon += ell;
    }
  }
  return g;
}

}  // namespace gdua
