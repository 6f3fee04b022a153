#pragma once

#include <stdexcept>
#include <string>

namespace disent {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A candidate density matrix violates one of the physicality invariants.
/// Carries which invariant failed and the magnitude of the violation.
class DensityError : public Error {
 public:
  enum class Kind { NotHermitian, TraceNotOne, NotPositive };

  DensityError(Kind kind, double violation, const std::string& msg)
      : Error(msg), kind(kind), violation(violation) {}

  Kind kind;
  double violation;
};

/// An argument is outside its mathematical domain (probability, rate, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested slice admits no physical state (positivity discriminant < 0).
class UnphysicalSlice : public Error {
 public:
  using Error::Error;
};

/// A closed-form boundary is singular at these channel parameters; the
/// numerical boundary search must be used instead.
class SingularChannel : public Error {
 public:
  using Error::Error;
};

/// Bisection was requested on a bracket where the objective does not change sign.
class NoSignChange : public Error {
 public:
  NoSignChange(const std::string& msg, double f_lo, double f_hi)
      : Error(msg), f_lo(f_lo), f_hi(f_hi) {}

  double f_lo;
  double f_hi;
};

/// The onset-time grid scan could not locate a trustworthy first crossing.
class BracketFailure : public Error {
 public:
  using Error::Error;
};

/// A state with no entanglement was passed where a Phi- or Psi-type
/// entangled state is required.
class SeparableInput : public Error {
 public:
  using Error::Error;
};

/// An eigenvalue computation failed or produced out-of-range values.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Invalid sweep/CLI configuration. Names the offending field.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& field, const std::string& msg)
      : Error(field + ": " + msg), field(field) {}

  std::string field;
};

}  // namespace disent
