#include "symlen/errors.hpp"

namespace symlen {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NDoesNotDivide: return "NDoesNotDivide";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::MixedAlgebras: return "MixedAlgebras";
    case ErrorCode::AlreadySplit: return "AlreadySplit";
    case ErrorCode::ZeroTwist: return "ZeroTwist";
    case ErrorCode::SumIsZero: return "SumIsZero";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::TIsZero: return "TIsZero";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::NonFieldSlot: return "NonFieldSlot";
    case ErrorCode::NotScalar: return "NotScalar";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::ZeroPartial: return "ZeroPartial";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::UnreachableLayer: return "UnreachableLayer";
    case ErrorCode::NotSteinberg: return "NotSteinberg";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::NotMinusPair: return "NotMinusPair";
    case ErrorCode::ReplayMismatch: return "ReplayMismatch";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::BadBackend: return "BadBackend";
  }
  return "Unknown";
}

}  // namespace symlen
