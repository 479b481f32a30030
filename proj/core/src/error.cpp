#include "polyana/error.hpp"

namespace polyana {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::StaudtClausenPole: return "StaudtClausenPole";
    case ErrorCode::SizeExceeded: return "SizeExceeded";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::InadmissiblePoint: return "InadmissiblePoint";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DegenerateArgument: return "DegenerateArgument";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::SingularChoice: return "SingularChoice";
    case ErrorCode::NoAdmissibleOrdering: return "NoAdmissibleOrdering";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace polyana
