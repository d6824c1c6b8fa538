#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strat {

enum class ErrorKind {
  // input / structural errors
  DuplicateElement,
  UnknownElement,
  CycleDetected,
  IdentifierClash,
  NotMonotone,
  IndexOutOfRange,
  NotSimplicial,
  InconsistentConstraint,
  NotAFunctor,
  PhiNotSimplicial,
  PhiNotMonotone,
  BaseMismatch,
  SquareDoesNotCommute,
  InvalidAttachment,
  NotASubchain,
  NotAnIsomorphismOfPosets,
  NegativeCoordinate,
  SumOutOfTolerance,
  PreconditionViolated,
  NotFiltered,
  BoundTooSmall,
  UnsupportedObject,
  ParseError,
  UsageError,
  // resource limits
  BudgetExceeded,
  // internal consistency failures; these signal bugs, not bad input
  BijectionFailure,
  NaturalityFailure,
  GlueMismatch,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Default cap on the number of simplex terms an operation may materialize.
inline constexpr std::size_t kDefaultBudget = 1'000'000;

}  // namespace strat
