#pragma once

#include <stdexcept>
#include <string>

namespace gpab {

enum class ErrorCode {
  UnknownVertex,
  NonPrimePower,
  DuplicateVertex,
  LoopEdge,
  MalformedJson,
  MalformedWord,
  DominationFails,
  NotComponentUnion,
  NotAUnit,
  NotAGraphAutomorphism,
  NotAnAutomorphism,
  NotAnInnerCandidate,
  NotRestrictable,
  KernelNotPreserved,
  NotInAutZero,
  NotInOutOneInf,
  NotConnectedOrIsStar,
  SizeCapExceeded,
  GraphMismatch,
  Overflow,
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

}  // namespace gpab
