#pragma once

#include <stdexcept>
#include <string>

namespace dmcs {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Io,
  SelfLoop,
  NegativeWeight,
  UnknownNode,
  QueriesDisconnected,
  NotConnected,
  EmptyGraph,
  DanglingNode,
  ContractViolation,
  NoKCoreCommunity,
  SizeRefusal,
  NotApplicable,
};

/// Stable lowercase identifier for an error code, used in JSON error objects.
const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dmcs
