#include "approxcommute/error.hpp"

namespace approxcommute {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::BadTable: return "BadTable";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::ClassCountCapExceeded: return "ClassCountCapExceeded";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotSubgroup: return "NotSubgroup";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::ExactCapExceeded: return "ExactCapExceeded";
    case ErrorKind::PowerCapExceeded: return "PowerCapExceeded";
    case ErrorKind::ProbabilityBelowEpsilon: return "ProbabilityBelowEpsilon";
    case ErrorKind::NormalEnumerationCapExceeded: return "NormalEnumerationCapExceeded";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::SpecParseError: return "SpecParseError";
    case ErrorKind::UnknownStatement: return "UnknownStatement";
  }
  return "Unknown";
}

}  // namespace approxcommute
