#pragma once

#include <stdexcept>
#include <string>

namespace syntrace {

enum class Err {
  // data / input errors
  EmptyPrompt,
  CorpusUnreadable,
  NotEnoughTemplates,
  MissingBucket,
  InsufficientSamples,
  TargetMatchesTrigger,
  PromptTooLong,
  PromptTooShort,
  UnknownToken,
  TooFewScores,
  TooFewMatrices,
  EmptySet,
  ShapeMismatch,
  BadArgument,
  // runtime errors
  BackendUnavailable,
  BudgetExhausted,
  CannotEscapeTemplate,
  NotSymmetric,
  NotSpd,
  NoConvergence,
  ZeroVector,
  NonFiniteLoss,
  IoError,
};

const char* err_name(Err e);

// CLI contract: 0 success, 1 usage, 2 data, 3 runtime.
int err_exit_code(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void raise(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace syntrace
