#include "gdua/parse.hpp"

#include <cctype>
#include <utility>
#include <vector>

namespace gdua {

namespace {

constexpr unsigned long long kMaxRootOrder = 1000000;
constexpr unsigned long long kMaxHExponent = 1000000;

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) throw SyntaxError(pos, std::string("expected ") + what);
  }
  [[noreturn]] void fail(const std::string& what) {
    skip_ws();
    throw SyntaxError(pos, "expected " + what);
  }
};

Integer lex_digits(Cursor& c) {
  c.skip_ws();
  std::size_t start = c.pos;
  while (c.pos < c.s.size() &&
         std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    ++c.pos;
  }
  if (c.pos == start) throw SyntaxError(c.pos, "expected digit");
  return Integer(c.s.substr(start, c.pos - start));
}

Integer parse_int(Cursor& c) {
  bool neg = false;
  char p = c.peek();
  if (p == '-' || p == '+') {
    neg = p == '-';
    ++c.pos;
  }
  Integer v = lex_digits(c);
  return neg ? Integer(-v) : v;
}

unsigned parse_bounded_nat(Cursor& c, unsigned long long cap,
                           const char* what) {
  c.skip_ws();
  std::size_t at = c.pos;
  Integer v = lex_digits(c);
  if (v > cap) throw SyntaxError(at, std::string(what) + " too large");
  return v.convert_to<unsigned>();
}

Rational parse_rational(Cursor& c) {
  Integer num = parse_int(c);
  if (c.accept('/')) {
    c.skip_ws();
    std::size_t at = c.pos;
    Integer den = lex_digits(c);
    if (den == 0) throw SyntaxError(at, "denominator must be positive");
    return Rational(num, den);
  }
  return Rational(num);
}

// Value q * zeta(n)^k with 0 <= k < n; a term with no root has n = 1, k = 0.
struct TermValue {
  Rational q;
  unsigned n = 1;
  long long k = 0;
};

// 'zeta(' nat ')' ('^' int)?
std::pair<unsigned, long long> parse_root(Cursor& c) {
  c.skip_ws();
  if (c.s.compare(c.pos, 4, "zeta") != 0) c.fail("'zeta'");
  c.pos += 4;
  c.expect('(', "'('");
  c.skip_ws();
  std::size_t at = c.pos;
  unsigned n = parse_bounded_nat(c, kMaxRootOrder, "root order");
  if (n == 0) throw SyntaxError(at, "root order must be positive");
  c.expect(')', "')'");
  long long k = 0;
  if (c.accept('^')) {
    Integer e = parse_int(c);
    Integer m = e % n;
    if (m < 0) m += n;
    k = m.convert_to<long long>();
  } else {
    k = 1 % n;
  }
  return {n, k};
}

// rational ('*' root)? | root. Leaves a '*' that is not followed by a root
// unconsumed so the polynomial term parser can claim '* h'.
TermValue parse_term(Cursor& c) {
  TermValue t;
  if (c.peek() == 'z') {
    auto [n, k] = parse_root(c);
    t.q = 1;
    t.n = n;
    t.k = k;
    return t;
  }
  t.q = parse_rational(c);
  std::size_t save = c.pos;
  if (c.accept('*') && c.peek() == 'z') {
    auto [n, k] = parse_root(c);
    t.n = n;
    t.k = k;
  } else {
    c.pos = save;
  }
  return t;
}

CycloNumber term_cyclo(const TermValue& t) {
  return CycloNumber::root_of_unity(t.n, t.k).scaled(t.q);
}

}  // namespace

ScalarValue parse_scalar(const std::string& text) {
  Cursor c{text};
  std::vector<TermValue> terms;
  terms.push_back(parse_term(c));
  while (true) {
    char p = c.peek();
    if (p == '+' || p == '-') {
      ++c.pos;
      TermValue t = parse_term(c);
      if (p == '-') t.q = -t.q;
      terms.push_back(t);
    } else {
      break;
    }
  }
  if (c.peek() != '\0') throw SyntaxError(c.pos, "unexpected character");

  if (terms.size() == 1) {
    const TermValue& t = terms.front();
    if (t.q == 0) return CycloNumber::zero(t.n);
    return MonomialScalar::make(t.q, t.n, t.k);
  }
  unsigned ambient = 1;
  for (const TermValue& t : terms) ambient = lcm_order(ambient, t.n);
  CycloNumber sum = CycloNumber::zero(ambient);
  for (const TermValue& t : terms) sum += term_cyclo(t).embedded(ambient);
  return sum;
}

Poly parse_poly(const std::string& text) {
  Cursor c{text};
  Poly acc = Poly::zero(1);
  bool first = true;
  while (true) {
    Rational sign = 1;
    char p = c.peek();
    if (!first) {
      if (p != '+' && p != '-') break;
      ++c.pos;
      if (p == '-') sign = -1;
    }
    first = false;

    TermValue t;
    unsigned e = 0;
    if (c.peek() == 'h') {
      t.q = 1;
    } else {
      t = parse_term(c);
      if (c.accept('*')) {
        if (c.peek() != 'h') c.fail("'h' or 'zeta'");
      } else {
        e = 0;
        t.q *= sign;
        Poly termp = Poly::monomial(term_cyclo(t), e);
        unsigned ambient = lcm_order(acc.ambient_order(), t.n);
        acc = acc.embedded(ambient) + termp.embedded(ambient);
        continue;
      }
    }
    c.expect('h', "'h'");
    e = 1;
    if (c.accept('^')) e = parse_bounded_nat(c, kMaxHExponent, "exponent");
    t.q *= sign;
    Poly termp = Poly::monomial(term_cyclo(t), e);
    unsigned ambient = lcm_order(acc.ambient_order(), t.n);
    acc = acc.embedded(ambient) + termp.embedded(ambient);
  }
  if (c.peek() != '\0') throw SyntaxError(c.pos, "unexpected character");
  return acc;
}

std::string format_rational(const Rational& q) {
  std::string out = boost::multiprecision::numerator(q).str();
  Integer den = boost::multiprecision::denominator(q);
  if (den != 1) out += "/" + den.str();
  return out;
}

namespace {

std::string root_string(unsigned n, unsigned k) {
  std::string out = "zeta(" + std::to_string(n) + ")";
  if (k != 1) out += "^" + std::to_string(k);
  return out;
}

// One grammar term with |q| * zeta(n)^k * h^e. The leading term of a sum
// carries its own sign, which forces an explicit rational prefix ("-1*h"
// rather than the invalid "-h"); later terms put the sign in the separator.
std::string piece_string(const Rational& q, unsigned n, unsigned k, unsigned e,
                         bool leading) {
  bool neg = q < 0;
  Rational a = neg ? Rational(-q) : q;
  bool forced = leading && neg;
  std::string out;
  if (k > 0) {
    if (a != 1 || forced) out = format_rational(forced ? -a : a) + "*";
    out += root_string(n, k);
  } else if (a != 1 || forced || e == 0) {
    out = format_rational(forced ? -a : a);
  }
  if (e > 0) {
    if (!out.empty()) out += "*";
    out += e == 1 ? "h" : "h^" + std::to_string(e);
  }
  return out;
}

// Shared by format_cyclo and format_poly: appends the basis pieces of one
// cyclotomic coefficient attached to h^e.
void append_coefficient(std::string& out, bool& first, const CycloNumber& v,
                        unsigned e) {
  unsigned n = v.ambient_order();
  const auto& coeffs = v.coefficients();
  for (unsigned k = 0; k < coeffs.size(); ++k) {
    const Rational& q = coeffs[k];
    if (q == 0) continue;
    if (first) {
      out += piece_string(q, n, k, e, true);
      first = false;
    } else {
      out += q < 0 ? " - " : " + ";
      out += piece_string(q < 0 ? Rational(-q) : q, n, k, e, false);
    }
  }
}

}  // namespace

std::string format_cyclo(const CycloNumber& v) {
  if (v.is_zero()) return "0";
  std::string out;
  bool first = true;
  append_coefficient(out, first, v, 0);
  return out;
}

std::string format_scalar(const ScalarValue& v) {
  if (std::holds_alternative<CycloNumber>(v)) {
    return format_cyclo(std::get<CycloNumber>(v));
  }
  const MonomialScalar& m = std::get<MonomialScalar>(v);
  if (m.root_order() == 1) return format_rational(m.q());
  if (m.root_order() == 2) return format_rational(-m.q());
  std::string out;
  if (m.q() != 1) out = format_rational(m.q()) + "*";
  return out + root_string(m.root_order(), m.root_exponent());
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  unsigned deg = *p.degree();
  for (unsigned e = deg + 1; e-- > 0;) {
    append_coefficient(out, first, p.coeff(e), e);
  }
  return out;
}

}  // namespace gdua
