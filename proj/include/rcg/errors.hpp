#pragma once

#include <stdexcept>
#include <string>

namespace rcg {

// Base class for every error this library throws deliberately.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An input fell outside an operation's documented domain.
struct DomainError : Error {
  using Error::Error;
};

// A root-finding bracket does not enclose a sign change.
struct BracketError : Error {
  using Error::Error;
};

// An iteration budget ran out; carries the best iterate seen so far.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, double best_iterate)
      : Error(what), best(best_iterate) {}
  double best;
};

// A survival probability in a denominator underflowed past the point where
// the ratio means anything; raised instead of returning infinities.
struct DegenerateDenominatorError : Error {
  using Error::Error;
};

// The equilibrium quadratic has no root inside [0,1]. Carries both roots
// (NaN when the discriminant is negative) so callers can report them.
struct NoInteriorEquilibriumError : Error {
  NoInteriorEquilibriumError(const std::string& what, double lo, double hi)
      : Error(what), root_lo(lo), root_hi(hi) {}
  double root_lo;
  double root_hi;
};

// Both quadratic roots are admissible; not silently resolved.
struct AmbiguousEquilibriumError : Error {
  AmbiguousEquilibriumError(const std::string& what, double lo, double hi)
      : Error(what), root_lo(lo), root_hi(hi) {}
  double root_lo;
  double root_hi;
};

}  // namespace rcg
