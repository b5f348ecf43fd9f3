#pragma once

#include <stdexcept>
#include <string>

namespace etheta {

enum class ErrorCode {
  DuplicateLabel,
  MissingEmpty,
  MissingFull,
  NotClosedUnderUnion,
  NotClosedUnderIntersection,
  MemberOutOfRange,
  EmptyCarrier,
  CarrierTooLarge,
  DomainMismatch,
  PreconditionUnmet,
  UnknownClaim,
  UnknownPoint,
  ParseError,
  InternalCharacterizationMismatch,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace etheta
