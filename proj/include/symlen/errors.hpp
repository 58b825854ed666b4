#pragma once

#include <stdexcept>
#include <string>

namespace symlen {

enum class ErrorCode {
  NDoesNotDivide,
  ZeroInput,
  NotIrreducible,
  MixedAlgebras,
  AlreadySplit,
  ZeroTwist,
  SumIsZero,
  DegreeMismatch,
  TIsZero,
  NotCoprime,
  LevelMismatch,
  NonFieldSlot,
  NotScalar,
  TooLarge,
  NotFound,
  ZeroNorm,
  ZeroPartial,
  InvalidCertificate,
  BudgetExhausted,
  UnreachableLayer,
  NotSteinberg,
  NotUnit,
  ZeroScalar,
  NotMinusPair,
  ReplayMismatch,
  Parse,
  BadBackend,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symlen
