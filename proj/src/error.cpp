#include "tdouble/error.hpp"

namespace tdouble {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::CrossrefError: return "CROSSREF_ERROR";
    case ErrorCode::InvalidGroup: return "INVALID_GROUP";
    case ErrorCode::NotSubgroup: return "NOT_SUBGROUP";
    case ErrorCode::InvalidGSet: return "INVALID_GSET";
    case ErrorCode::InvalidCocycle: return "INVALID_COCYCLE";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::MismatchedAlgebra: return "MISMATCHED_ALGEBRA";
    case ErrorCode::CoboundaryMismatch: return "COBOUNDARY_MISMATCH";
    case ErrorCode::InvalidModule: return "INVALID_MODULE";
    case ErrorCode::NotProjective: return "NOT_PROJECTIVE";
    case ErrorCode::NotRootOfUnity: return "NOT_ROOT_OF_UNITY";
    case ErrorCode::IllConditioned: return "ILL_CONDITIONED";
    case ErrorCode::Unsupported: return "UNSUPPORTED";
  }
  return "UNKNOWN";
}

}  // namespace tdouble
