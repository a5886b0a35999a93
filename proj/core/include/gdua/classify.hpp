#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdua/conformal.hpp"
#include "gdua/pbw.hpp"
#include "gdua/poly.hpp"
#include "gdua/scalar.hpp"

namespace gdua {

enum class Verdict { NOT_NOETHERIAN, UFD, UFR_NOT_UFD, NOT_UFR };

enum class Coverage { COMPLETE_LIST, PARTIAL_LIST };

enum class PrimeGenerator {
  H,
  H_POW_L_MINUS_LAMBDA,
  D,
  U,
  DU_MINUS_UD,
  Z_POW_L_MINUS_LAMBDA,
  H_MINUS_LAMBDA,
  U_POW_K,
  D_POW_K,
  Q_LAMBDA,
};

std::string to_string(Verdict v);
std::string to_string(Coverage c);
std::string to_string(PrimeGenerator g);

/// One height-one prime (or, for Q_LAMBDA, a family of non-principal primes
/// known to exist) of the algebra.
struct PrimeDescriptor {
  PrimeGenerator generator = PrimeGenerator::H;
  /// Description of the family parameter, e.g. "lambda in K*"; absent for
  /// single ideals.
  std::optional<std::string> family_parameter;
  /// Whether the ideal is completely prime; absent when not asserted.
  std::optional<bool> completely_prime;
  bool principal = true;
  /// The concrete exponent (order of the root of unity, or the minimal
  /// vanishing index) when the generator tag carries one.
  std::optional<unsigned> exponent;
};

struct PrimeInventory {
  Coverage coverage = Coverage::PARTIAL_LIST;
  std::vector<PrimeDescriptor> primes;
};

/// Everything the verdict was computed from, exposed for auditing.
struct Witnesses {
  bool conformal = false;
  std::optional<Poly> g;
  /// gamma/(r - 1); defined only when r != 1.
  std::optional<CycloNumber> w;
  /// Whether f has a root different from w; evaluated only when f != 0 and
  /// r != 1 (the conditions needing it cannot fire at r = 1).
  std::optional<bool> nontrivial_root;
  Integer tau;
  Integer epsilon;
  int group_rank = 0;
  bool torsionfree = false;
  std::optional<unsigned> r_order;
  std::optional<unsigned> s_order;
  /// Least k > 0 with P_k = 0; evaluated when f != 0.
  std::optional<unsigned> minimal_k;
};

struct TraceEntry {
  std::string condition;
  std::string outcome;
  bool operator==(const TraceEntry&) const = default;
};

struct Classification {
  Verdict verdict = Verdict::NOT_UFR;
  std::string fired_rule;
  Witnesses witnesses;
  PrimeInventory inventory;
  std::vector<TraceEntry> trace;
};

/**
 * Master classifier. The algebra fails to be a UFR exactly when f != 0 and
 * one of three conditions holds (non-conformal with r not a root of unity
 * and a root of f away from w; conformal with free rank-2 scalar group and a
 * root away from w; gamma != 0, r = 1, s not a root of unity, deg f >= 1).
 * A UFR is a UFD exactly when <r, s> is torsionfree.
 */
Classification classify(const Presentation& pres);

/**
 * Independent per-regime classifier: normalizes gamma away when r != 1,
 * then dispatches on f = 0 / conformality / the root-of-unity status of r
 * and applies the matching regime theorem directly. Same output shape as
 * classify; the two must agree on every input.
 */
Classification classify_by_regime(const Presentation& pres);

/**
 * Monomial scalars for (r, s), rescuing cyclotomic inputs that happen to be
 * of monomial shape. nullopt when r or s is zero (the not-Noetherian case);
 * UnsupportedScalarForm when a nonzero scalar is not recognizable.
 */
std::optional<std::pair<MonomialScalar, MonomialScalar>> resolve_scalar_pair(
    const ScalarValue& r, const ScalarValue& s);

/// classify over raw scalar values: r*s = 0 yields the NOT_NOETHERIAN
/// classification instead of an error.
Classification classify_general(const Poly& f, const ScalarValue& r,
                                const ScalarValue& s, const CycloNumber& gamma);

/// Same wrapping for the per-regime classifier.
Classification classify_by_regime_general(const Poly& f, const ScalarValue& r,
                                          const ScalarValue& s,
                                          const CycloNumber& gamma);

/**
 * Down-up algebra A(alpha, beta, gamma) = L(h, r, s, gamma) where r, s are
 * the roots of h^2 - alpha*h - beta. ZeroBeta when beta = 0;
 * RootsNotRepresentable when the roots leave the monomial scalar domain
 * (use classify_downup_rs to supply the roots directly).
 */
Classification classify_downup(const CycloNumber& alpha,
                               const CycloNumber& beta,
                               const CycloNumber& gamma);

/// Alternative input form of classify_downup with the roots given directly.
Classification classify_downup_rs(const ScalarValue& r, const ScalarValue& s,
                                  const CycloNumber& gamma);

/// Smith algebra S(f) = L(f, 1, 1, 1); always a UFD (verified on return).
Classification classify_smith(const Poly& f);

/**
 * Height-one prime inventory. COMPLETE_LIST exactly in the three regimes
 * with a full enumeration: (i) f = 0, gamma != 0, r = 1; (ii) f != 0,
 * r = 1, gamma = 0, s not a root of unity; (iii) f = 1, s = 1, gamma = 0.
 * PARTIAL_LIST elsewhere, listing the primes known unconditionally.
 */
PrimeInventory prime_inventory(const Presentation& pres);

/**
 * A concrete element generating the described prime, with family parameters
 * instantiated at lambda = 1. nullopt for Q_LAMBDA (no explicit generator;
 * the family is non-principal).
 */
std::optional<AlgebraElement> sample_generator_element(
    const PrimeDescriptor& desc, const PresentationPtr& pres);

}  // namespace gdua
