#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdua {

/** Base class for all errors raised by the library. */
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

/// Binary arithmetic between cyclotomic numbers of different ambient orders.
struct AmbientOrderMismatch : Error {
  AmbientOrderMismatch(unsigned lhs, unsigned rhs)
      : Error("ambient order mismatch: " + std::to_string(lhs) + " vs " +
              std::to_string(rhs)) {}
};

/// Embedding requested into an ambient order the source order does not divide.
struct OrderNotDivisible : Error {
  OrderNotDivisible(unsigned from, unsigned to)
      : Error("order " + std::to_string(from) + " does not divide " +
              std::to_string(to)) {}
};

/// Operation invoked outside the regime where it is defined.
struct NotApplicable : Error {
  using Error::Error;
};

struct ZeroPolynomial : Error {
  ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct ZeroElement : Error {
  ZeroElement() : Error("operation undefined for the zero element") {}
};

/// Mixing algebra elements that belong to different presentations.
struct PresentationMismatch : Error {
  PresentationMismatch() : Error("elements belong to different presentations") {}
};

/// A stated precondition was checked and found violated.
struct PreconditionViolated : Error {
  using Error::Error;
};

/// A scalar that must be of monomial form q*zeta(n)^k is not.
struct UnsupportedScalarForm : Error {
  using Error::Error;
};

/// Roots of h^2 - alpha*h - beta are not representable in the scalar domain.
struct RootsNotRepresentable : Error {
  using Error::Error;
};

struct ZeroBeta : Error {
  ZeroBeta() : Error("beta must be nonzero") {}
};

/// A zero scalar was supplied where a nonzero one is required.
struct ZeroScalar : Error {
  using Error::Error;
};

/// Parse failure; offset is the byte position in the input text.
struct SyntaxError : Error {
  std::size_t offset;
  SyntaxError(std::size_t at, const std::string& what)
      : Error("syntax error at byte " + std::to_string(at) + ": " + what),
        offset(at) {}
};

}  // namespace gdua
