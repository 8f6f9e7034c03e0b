#pragma once

#include <stdexcept>
#include <string>

namespace symrig {

enum class ErrorCode {
  kTagMismatch,
  kInternal,
  kHermiticityBroken,
  kNotTraceless,
  kTorusConstraint,
  kZeroInput,
  kNotDominant,
  kAmbiguous,
  kDegenerate,
  kInvalidCorner,
  kUnknownLabel,
  kInvalidSolution,
  kInvalidLocation,
  kNotIsometry,
  kInvalidArgument,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this type; the code is the
// stable part, the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symrig
