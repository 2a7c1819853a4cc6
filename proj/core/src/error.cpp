#include "toricfrob/error.hpp"

namespace toricfrob {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::MalformedFan: return "MalformedFan";
    case ErrorCode::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DegenerateRelation: return "DegenerateRelation";
    case ErrorCode::RayExists: return "RayExists";
    case ErrorCode::OutsideSupport: return "OutsideSupport";
    case ErrorCode::NotDivisorial: return "NotDivisorial";
    case ErrorCode::InvalidContraction: return "InvalidContraction";
    case ErrorCode::UnmatchedRay: return "UnmatchedRay";
    case ErrorCode::RequiresSmooth: return "RequiresSmooth";
    case ErrorCode::ChainStuck: return "ChainStuck";
    case ErrorCode::NotARelation: return "NotARelation";
    case ErrorCode::NotInert: return "NotInert";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::RequiresRankTwo: return "RequiresRankTwo";
  }
  return "Unknown";
}

}  // namespace toricfrob
