#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vty {

enum class ErrorCode {
  ParseError,
  UnresolvedReference,
  InvalidArgument,
  DepthExplosion,
  AtomCapExceeded,
  SubsetCapExceeded,
  MapUndefined,
  UndeclaredAxiom,
  DecodeError,
  BadSymbol,
  EnumerationCapExceeded,
};

std::string_view error_code_name(ErrorCode code);

// Every operation-level failure in the library is reported through this type.
// The code is stable and appears verbatim in JSON reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vty
