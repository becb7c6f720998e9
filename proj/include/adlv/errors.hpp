#ifndef ADLV_ERRORS_HPP
#define ADLV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace adlv {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument: bad type/rank, malformed word, violated precondition,
// elements from different root systems mixed in one operation.
class InvalidInput : public Error {
public:
  explicit InvalidInput(const std::string& msg) : Error(msg) {}
};

// A 64-bit arithmetic operation would wrap. Raised instead of wrapping.
class OverflowError : public Error {
public:
  explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// An enumeration-scale operation was requested above the configured rank
// limit without an explicit override.
class GuardError : public Error {
public:
  explicit GuardError(const std::string& msg) : Error(msg) {}
};

// A structural guarantee the algorithms rely on failed to hold at runtime.
// Always a bug in this library, never a caller error.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace adlv

#endif
