#pragma once

#include <stdexcept>
#include <string>

namespace gbr {

/// Violated call contract (bad constant term, index out of range, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// A series/sum evaluation whose tail could not be certified below tolerance.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, double where)
      : std::runtime_error(what), at(where) {}
  double at;  // the offending evaluation point
};

/// Adaptive quadrature failed to reach the requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_error(achieved) {}
  double achieved_error;
};

enum class SolveErrorKind {
  ConditionViolated,   // LHS(0+) >= RHS, no root can bracket
  NoRootInRange,       // LHS stayed below RHS on the whole certified scan
  DivergenceBeforeRoot // tail certification failed before the first sign change
};

class SolveError : public std::runtime_error {
 public:
  SolveError(SolveErrorKind k, const std::string& what)
      : std::runtime_error(what), kind(k) {}
  SolveErrorKind kind;
};

inline const char* to_string(SolveErrorKind k) {
  switch (k) {
    case SolveErrorKind::ConditionViolated: return "ConditionViolated";
    case SolveErrorKind::NoRootInRange: return "NoRootInRange";
    case SolveErrorKind::DivergenceBeforeRoot: return "DivergenceBeforeRoot";
  }
  return "UnknownSolveError";
}

}  // namespace gbr
