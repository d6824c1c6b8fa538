#include "strat/error.hpp"

namespace strat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::IdentifierClash: return "IdentifierClash";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotSimplicial: return "NotSimplicial";
    case ErrorKind::InconsistentConstraint: return "InconsistentConstraint";
    case ErrorKind::NotAFunctor: return "NotAFunctor";
    case ErrorKind::PhiNotSimplicial: return "PhiNotSimplicial";
    case ErrorKind::PhiNotMonotone: return "PhiNotMonotone";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::SquareDoesNotCommute: return "SquareDoesNotCommute";
    case ErrorKind::InvalidAttachment: return "InvalidAttachment";
    case ErrorKind::NotASubchain: return "NotASubchain";
    case ErrorKind::NotAnIsomorphismOfPosets: return "NotAnIsomorphismOfPosets";
    case ErrorKind::NegativeCoordinate: return "NegativeCoordinate";
    case ErrorKind::SumOutOfTolerance: return "SumOutOfTolerance";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotFiltered: return "NotFiltered";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
    case ErrorKind::UnsupportedObject: return "UnsupportedObject";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UsageError: return "UsageError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::BijectionFailure: return "BijectionFailure";
    case ErrorKind::NaturalityFailure: return "NaturalityFailure";
    case ErrorKind::GlueMismatch: return "GlueMismatch";
  }
  return "Unknown";
}

}  // namespace strat
