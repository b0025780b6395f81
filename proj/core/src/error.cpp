#include "ietseq/error.hpp"

namespace ietseq {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::RadicandMismatch: return "RadicandMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::RationalInput: return "RationalInput";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::NonPositiveResult: return "NonPositiveResult";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NoReturnWithinBudget: return "NoReturnWithinBudget";
    case ErrorCode::NotFoundWithinWindow: return "NotFoundWithinWindow";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ietseq
