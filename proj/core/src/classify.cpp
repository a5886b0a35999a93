#include "gdua/classify.hpp"

#include <cassert>

namespace gdua {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::NOT_NOETHERIAN: return "NOT_NOETHERIAN";
    case Verdict::UFD: return "UFD";
    case Verdict::UFR_NOT_UFD: return "UFR_NOT_UFD";
    case Verdict::NOT_UFR: return "NOT_UFR";
  }
  return "?";
}

std::string to_string(Coverage c) {
  return c == Coverage::COMPLETE_LIST ? "COMPLETE_LIST" : "PARTIAL_LIST";
}

std::string to_string(PrimeGenerator g) {
  switch (g) {
    case PrimeGenerator::H: return "H";
    case PrimeGenerator::H_POW_L_MINUS_LAMBDA: return "H_POW_L_MINUS_LAMBDA";
    case PrimeGenerator::D: return "D";
    case PrimeGenerator::U: return "U";
    case PrimeGenerator::DU_MINUS_UD: return "DU_MINUS_UD";
    case PrimeGenerator::Z_POW_L_MINUS_LAMBDA: return "Z_POW_L_MINUS_LAMBDA";
    case PrimeGenerator::H_MINUS_LAMBDA: return "H_MINUS_LAMBDA";
    case PrimeGenerator::U_POW_K: return "U_POW_K";
    case PrimeGenerator::D_POW_K: return "D_POW_K";
    case PrimeGenerator::Q_LAMBDA: return "Q_LAMBDA";
  }
  return "?";
}

namespace {

void push(std::vector<TraceEntry>& trace, std::string cond, std::string out) {
  trace.push_back(TraceEntry{std::move(cond), std::move(out)});
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string order_str(const std::optional<unsigned>& ord) {
  return ord ? "order " + std::to_string(*ord) : "no";
}

Witnesses gather_witnesses(const Presentation& pres) {
  Witnesses w;
  GroupStructure gs = group_structure(pres.r(), pres.s());
  w.tau = gs.tau;
  w.epsilon = gs.epsilon;
  w.group_rank = gs.group_rank;
  w.torsionfree = gs.torsionfree;
  w.r_order = gs.r_order;
  w.s_order = gs.s_order;

  auto cw = conformal_witness(pres.f(), pres.r(), pres.s(), pres.gamma());
  w.conformal = cw.has_value();
  if (cw) w.g = cw->g;

  if (!pres.r().is_one()) {
    unsigned ambient = pres.ambient_order();
    CycloNumber denom =
        pres.r().to_cyclo(ambient) - CycloNumber::one(ambient);
    w.w = pres.gamma() / denom;
    if (!pres.f().is_zero()) {
      w.nontrivial_root = pres.f().has_root_other_than(*w.w);
    }
  }
  if (!pres.f().is_zero()) {
    w.minimal_k = minimal_vanishing_k(pres.f(), pres.r(), pres.s());
  }
  return w;
}

Classification not_noetherian() {
  Classification c;
  c.verdict = Verdict::NOT_NOETHERIAN;
  c.fired_rule = "noetherian.rs_zero";
  push(c.trace, "r*s != 0", "false");
  return c;
}

Verdict ufr_to_verdict(bool ufr, bool ufd) {
  if (!ufr) return Verdict::NOT_UFR;
  return ufd ? Verdict::UFD : Verdict::UFR_NOT_UFD;
}

}  // namespace

Classification classify(const Presentation& pres) {
  Classification c;
  c.witnesses = gather_witnesses(pres);
  const Witnesses& w = c.witnesses;
  auto& tr = c.trace;

  const Poly& f = pres.f();
  bool f_zero = f.is_zero();
  bool r_is_one = pres.r().is_one();
  bool gamma_zero = pres.gamma_is_zero();

  push(tr, "r*s != 0", "true");
  push(tr, "f = 0", bool_str(f_zero));

  bool case_a = false, case_b = false, case_c = false;
  if (!f_zero) {
    push(tr, "f conformal", bool_str(w.conformal));
    push(tr, "r root of unity", order_str(w.r_order));
    push(tr, "s root of unity", order_str(w.s_order));
    if (r_is_one) {
      push(tr, "ThmB.case_a",
           "vacuous at r = 1 (non-conformality forces s = 1 and gamma = 0, "
           "where r is a root of unity)");
      push(tr, "ThmB.case_b", "vacuous at r = 1 (<r,s> has rank at most 1)");
    } else {
      push(tr, "f has a root other than gamma/(r-1)",
           bool_str(*w.nontrivial_root));
      case_a = !w.conformal && !w.r_order && *w.nontrivial_root;
      case_b = w.conformal && w.group_rank == 2 && w.torsionfree &&
               *w.nontrivial_root;
      push(tr, "ThmB.case_a", case_a ? "fired" : "not fired");
      push(tr, "ThmB.case_b", case_b ? "fired" : "not fired");
    }
    case_c = !gamma_zero && r_is_one && !w.s_order &&
             f.degree().value_or(0) >= 1;
    push(tr, "ThmB.case_c", case_c ? "fired" : "not fired");
  }

  bool ufr = !(!f_zero && (case_a || case_b || case_c));
  if (!ufr) {
    c.verdict = Verdict::NOT_UFR;
    c.fired_rule = case_a   ? "ThmB.case_a"
                   : case_b ? "ThmB.case_b"
                            : "ThmB.case_c";
  } else {
    push(tr, "<r,s> torsionfree", bool_str(w.torsionfree));
    c.verdict = w.torsionfree ? Verdict::UFD : Verdict::UFR_NOT_UFD;
    c.fired_rule = w.torsionfree ? "ThmA.ufd" : "ThmA.ufr_not_ufd";
  }

  c.inventory = prime_inventory(pres);
  return c;
}

Classification classify_by_regime(const Presentation& pres) {
  const MonomialScalar& r = pres.r();
  if (!pres.gamma_is_zero() && !r.is_one()) {
    // L(f, r, s, gamma) ~ L(f~, r, s, 0) with f~(h) = f((h + gamma)/(r - 1)).
    unsigned ambient = pres.ambient_order();
    CycloNumber denom = r.to_cyclo(ambient) - CycloNumber::one(ambient);
    Poly ft = pres.f().compose_affine(denom.inverse(), pres.gamma() / denom);
    Presentation norm(ft, r, pres.s(), CycloNumber::zero(1));
    Classification c = classify_by_regime(norm);
    c.trace.insert(c.trace.begin(),
                   TraceEntry{"gamma normalization",
                              "substituted f~(h) = f((h + gamma)/(r - 1)); "
                              "continuing with gamma = 0"});
    c.inventory = prime_inventory(pres);
    return c;
  }

  Classification c;
  c.witnesses = gather_witnesses(pres);
  const Witnesses& w = c.witnesses;
  auto& tr = c.trace;

  const Poly& f = pres.f();
  bool f_zero = f.is_zero();
  bool gamma_zero = pres.gamma_is_zero();

  push(tr, "f = 0", bool_str(f_zero));

  if (f_zero) {
    if (gamma_zero) {
      c.fired_rule = "regime.f_zero.gamma0";
      push(tr, "<r,s> torsionfree", bool_str(w.torsionfree));
      c.verdict = ufr_to_verdict(true, w.torsionfree);
    } else {
      // r = 1 after normalization.
      c.fired_rule = "regime.f_zero.gamma_nonzero";
      push(tr, "s root of unity", order_str(w.s_order));
      bool ufd = !w.s_order || *w.s_order == 1;
      c.verdict = ufr_to_verdict(true, ufd);
    }
  } else {
    push(tr, "f conformal", bool_str(w.conformal));
    if (!w.conformal) {
      // Non-conformality forces gamma = 0.
      assert(gamma_zero);
      c.fired_rule = "regime.nonconformal";
      bool monomial = f.is_monomial();
      push(tr, "f monomial", bool_str(monomial));
      push(tr, "r root of unity", order_str(w.r_order));
      bool ufr = !(!monomial && !w.r_order);
      bool ufd = (w.r_order && *w.r_order == 1) || (!w.r_order && monomial);
      c.verdict = ufr_to_verdict(ufr, ufd);
    } else if (r.is_one()) {
      if (!gamma_zero) {
        c.fired_rule = "regime.conformal.r1.gamma_nonzero";
        bool f_const = *f.degree() == 0;
        push(tr, "s root of unity", order_str(w.s_order));
        push(tr, "f constant", bool_str(f_const));
        bool s_ru = w.s_order.has_value();
        bool ufr = s_ru || f_const;
        bool ufd = (s_ru && *w.s_order == 1) || (!s_ru && f_const);
        c.verdict = ufr_to_verdict(ufr, ufd);
      } else if (!w.s_order) {
        c.fired_rule = "regime.conformal.r1.gamma0.s_not_root_of_unity";
        push(tr, "s root of unity", "no");
        c.verdict = Verdict::UFD;
      } else {
        // s has order >= 2: conformality at r = 1, gamma = 0 rules out s = 1.
        assert(*w.s_order >= 2);
        c.fired_rule = "regime.conformal.r1.gamma0.s_root_of_unity";
        push(tr, "s root of unity", order_str(w.s_order));
        c.verdict = Verdict::UFR_NOT_UFD;
      }
    } else if (!w.r_order) {
      c.fired_rule = "regime.conformal.r_not_root_of_unity";
      bool monomial = f.is_monomial();
      push(tr, "f monomial", bool_str(monomial));
      push(tr, "tau", w.tau.str());
      push(tr, "epsilon", w.epsilon.str());
      bool ufr = w.tau > 0 || monomial;
      Integer eps_abs = w.epsilon < 0 ? Integer(-w.epsilon) : w.epsilon;
      bool rank2_free = w.tau == 0;
      bool rank1_free = w.tau >= 1 && gcd(w.tau, eps_abs) == 1;
      bool ufd = (rank2_free && monomial) || rank1_free;
      c.verdict = ufr_to_verdict(ufr, ufd);
    } else {
      // r != 1 a root of unity.
      c.fired_rule = "regime.conformal.r_root_of_unity";
      push(tr, "r root of unity", order_str(w.r_order));
      c.verdict = Verdict::UFR_NOT_UFD;
    }
  }

  c.inventory = prime_inventory(pres);
  return c;
}

std::optional<std::pair<MonomialScalar, MonomialScalar>> resolve_scalar_pair(
    const ScalarValue& r, const ScalarValue& s) {
  auto resolve = [](const ScalarValue& v) -> std::optional<MonomialScalar> {
    if (std::holds_alternative<MonomialScalar>(v)) {
      return std::get<MonomialScalar>(v);
    }
    const CycloNumber& c = std::get<CycloNumber>(v);
    if (c.is_zero()) return std::nullopt;
    auto m = try_to_monomial(c);
    if (!m) {
      throw UnsupportedScalarForm(
          "scalar is not of the form q * zeta(n)^k with rational q");
    }
    return m;
  };
  auto rm = resolve(r);
  auto sm = resolve(s);
  if (!rm || !sm) return std::nullopt;
  return std::make_pair(*rm, *sm);
}

Classification classify_general(const Poly& f, const ScalarValue& r,
                                const ScalarValue& s,
                                const CycloNumber& gamma) {
  auto rs = resolve_scalar_pair(r, s);
  if (!rs) return not_noetherian();
  return classify(Presentation(f, rs->first, rs->second, gamma));
}

Classification classify_by_regime_general(const Poly& f, const ScalarValue& r,
                                          const ScalarValue& s,
                                          const CycloNumber& gamma) {
  auto rs = resolve_scalar_pair(r, s);
  if (!rs) return not_noetherian();
  return classify_by_regime(Presentation(f, rs->first, rs->second, gamma));
}

Classification classify_downup(const CycloNumber& alpha,
                               const CycloNumber& beta,
                               const CycloNumber& gamma) {
  if (beta.is_zero()) throw ZeroBeta();
  unsigned ambient = lcm_order(alpha.ambient_order(), beta.ambient_order());
  CycloNumber a = alpha.embedded(ambient);
  CycloNumber discriminant = a * a + beta.embedded(ambient).scaled(4);

  MonomialScalar rm = MonomialScalar::one(), sm = MonomialScalar::one();
  if (discriminant.is_zero()) {
    auto m = try_to_monomial(a.scaled(Rational(1, 2)));
    if (!m) {
      throw RootsNotRepresentable(
          "the double root alpha/2 is not a monomial scalar");
    }
    rm = sm = *m;
  } else {
    auto dm = try_to_monomial(discriminant);
    if (!dm) {
      throw RootsNotRepresentable(
          "the discriminant alpha^2 + 4*beta is not a monomial scalar");
    }
    Rational sq;
    if (!rational_sqrt(dm->q(), sq)) {
      throw RootsNotRepresentable(
          "the discriminant has no square root in the monomial scalar "
          "domain");
    }
    MonomialScalar sqrt_delta = MonomialScalar::make(
        sq, 2 * dm->root_order(), dm->root_exponent());
    unsigned amb2 = lcm_order(ambient, sqrt_delta.root_order());
    CycloNumber sd = sqrt_delta.to_cyclo(amb2);
    CycloNumber ac = a.embedded(amb2);
    auto r_opt = try_to_monomial((ac + sd).scaled(Rational(1, 2)));
    auto s_opt = try_to_monomial((ac - sd).scaled(Rational(1, 2)));
    if (!r_opt || !s_opt) {
      throw RootsNotRepresentable("a root of h^2 - alpha*h - beta is not a "
                                  "monomial scalar");
    }
    rm = *r_opt;
    sm = *s_opt;
  }
  return classify(Presentation(Poly::h(1), rm, sm, gamma));
}

Classification classify_downup_rs(const ScalarValue& r, const ScalarValue& s,
                                  const CycloNumber& gamma) {
  auto rs = resolve_scalar_pair(r, s);
  if (!rs) throw ZeroBeta();  // beta = -r*s
  return classify(Presentation(Poly::h(1), rs->first, rs->second, gamma));
}

Classification classify_smith(const Poly& f) {
  Classification c = classify(Presentation(
      f, MonomialScalar::one(), MonomialScalar::one(), CycloNumber::one(1)));
  if (c.verdict != Verdict::UFD) {
    throw Error("Smith algebra classification violated its UFD guarantee");
  }
  return c;
}

PrimeInventory prime_inventory(const Presentation& pres) {
  const Poly& f = pres.f();
  const MonomialScalar& r = pres.r();
  const MonomialScalar& s = pres.s();
  bool f_zero = f.is_zero();
  bool gamma_zero = pres.gamma_is_zero();
  auto r_ord = r.is_root_of_unity();
  auto s_ord = s.is_root_of_unity();

  PrimeInventory inv;

  // Full enumeration: f = 0, gamma != 0, r = 1.
  if (f_zero && !gamma_zero && r.is_one()) {
    inv.coverage = Coverage::COMPLETE_LIST;
    inv.primes.push_back({PrimeGenerator::D, std::nullopt, true, true,
                          std::nullopt});
    inv.primes.push_back({PrimeGenerator::U, std::nullopt, true, true,
                          std::nullopt});
    if (s_ord) {
      inv.primes.push_back({PrimeGenerator::Z_POW_L_MINUS_LAMBDA,
                            "lambda in K*", *s_ord == 1, true, *s_ord});
    }
    return inv;
  }

  // Full enumeration: f != 0, r = 1, gamma = 0, s not a root of unity.
  if (!f_zero && r.is_one() && gamma_zero && !s_ord) {
    inv.coverage = Coverage::COMPLETE_LIST;
    inv.primes.push_back({PrimeGenerator::H_MINUS_LAMBDA, "lambda in K", true,
                          true, std::nullopt});
    inv.primes.push_back({PrimeGenerator::DU_MINUS_UD, std::nullopt, true,
                          true, std::nullopt});
    return inv;
  }

  // Full enumeration: f = 1, s = 1, gamma = 0 (r arbitrary).
  if (f == Poly::constant(Rational(1)) && s.is_one() && gamma_zero) {
    inv.coverage = Coverage::COMPLETE_LIST;
    inv.primes.push_back({PrimeGenerator::H, std::nullopt, true, true,
                          std::nullopt});
    if (r_ord) {
      inv.primes.push_back({PrimeGenerator::H_POW_L_MINUS_LAMBDA,
                            "lambda in K*", *r_ord == 1, true, *r_ord});
    }
    return inv;
  }

  inv.coverage = Coverage::PARTIAL_LIST;
  if (gamma_zero) {
    inv.primes.push_back({PrimeGenerator::H, std::nullopt, true, true,
                          std::nullopt});
    if (r_ord) {
      inv.primes.push_back({PrimeGenerator::H_POW_L_MINUS_LAMBDA,
                            "lambda in K*", *r_ord == 1, true, *r_ord});
    }
    if (!f_zero) {
      bool conformal = is_conformal(f, r, s, pres.gamma());
      if (conformal && r_ord && s_ord) {
        // Both scalars roots of unity and f conformal: P_k vanishes.
        auto k = minimal_vanishing_k(f, r, s);
        assert(k.has_value());
        if (k) {
          inv.primes.push_back({PrimeGenerator::U_POW_K, std::nullopt,
                                std::nullopt, true, *k});
          inv.primes.push_back({PrimeGenerator::D_POW_K, std::nullopt,
                                std::nullopt, true, *k});
        }
      }
      if (!conformal && !r_ord && !f.is_monomial()) {
        inv.primes.push_back(
            {PrimeGenerator::Q_LAMBDA,
             "lambda in K*: P_k(r^(k-1) lambda) = 0 for some k > 0",
             std::nullopt, false, std::nullopt});
      }
    }
  }
  return inv;
}

std::optional<AlgebraElement> sample_generator_element(
    const PrimeDescriptor& desc, const PresentationPtr& pres) {
  unsigned ambient = pres->ambient_order();
  CycloNumber one = CycloNumber::one(ambient);
  AlgebraElement lambda_one =
      AlgebraElement::monomial(pres, Mono{0, 0, 0}, one);
  switch (desc.generator) {
    case PrimeGenerator::H:
      return AlgebraElement::h(pres);
    case PrimeGenerator::D:
      return AlgebraElement::d(pres);
    case PrimeGenerator::U:
      return AlgebraElement::u(pres);
    case PrimeGenerator::H_MINUS_LAMBDA:
      return AlgebraElement::h(pres) - lambda_one;
    case PrimeGenerator::H_POW_L_MINUS_LAMBDA:
      return AlgebraElement::h(pres).pow(desc.exponent.value()) - lambda_one;
    case PrimeGenerator::DU_MINUS_UD:
      return AlgebraElement::d(pres) * AlgebraElement::u(pres) -
             AlgebraElement::u(pres) * AlgebraElement::d(pres);
    case PrimeGenerator::Z_POW_L_MINUS_LAMBDA: {
      auto cw =
          conformal_witness(pres->f(), pres->r(), pres->s(), pres->gamma());
      if (!cw) return std::nullopt;
      AlgebraElement z = AlgebraElement::u(pres) * AlgebraElement::d(pres) -
                         AlgebraElement::from_h_poly(pres, cw->g);
      return z.pow(desc.exponent.value()) - lambda_one;
    }
    case PrimeGenerator::U_POW_K:
      return AlgebraElement::u(pres).pow(desc.exponent.value());
    case PrimeGenerator::D_POW_K:
      return AlgebraElement::d(pres).pow(desc.exponent.value());
    case PrimeGenerator::Q_LAMBDA:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace gdua
