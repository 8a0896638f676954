#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace patsemi {

enum class ErrorCode {
  // input
  ParseError,
  NotCofinite,
  InvalidArgument,
  // preconditions
  NotMember,
  IsFullSet,
  NotMinimalGenerator,
  NotAdmissible,
  NegativeLead,
  PreconditionViolated,
  GcdIsOne,
  ElementBelowMultiplicity,
  // resource ceilings
  ConductorTooLarge,
  SearchTooLarge,
  NodeCeilingExceeded,
};

std::string_view to_string(ErrorCode code) noexcept;

enum class ErrorCategory { Input, Precondition, Resource };

ErrorCategory category(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace patsemi
