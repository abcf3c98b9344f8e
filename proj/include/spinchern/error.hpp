#pragma once

#include <stdexcept>
#include <string>

namespace spinchern {

enum class ErrorCode {
  InvalidArgument,   // malformed input, out-of-range parameters
  Parse,             // representation expression does not parse
  Domain,            // symbol or group outside its defined range (n < 6, lambda index)
  VirtualCharacter,  // negative multiplicity where a genuine representation is required
  Mismatch,          // operands live in different rings (variable count, ring tag, cutoff)
  NotUnit,           // truncated inverse of a series with non-unit constant term
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace spinchern
