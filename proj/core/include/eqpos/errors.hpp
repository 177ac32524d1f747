#pragma once

#include <stdexcept>
#include <string>

namespace eqpos {

/// Broad failure classes. The CLI maps each one to a distinct exit status.
enum class ErrorKind {
  kInvalidInput,  // malformed or out-of-domain input
  kGuard,         // a size or overflow bound was exceeded
  kConsistency,   // two independent computations disagreed
  kNotNef,        // a Seshadri constant was requested for a non-nef bundle
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& message)
      : Error(ErrorKind::kInvalidInput, message) {}
};

class GuardExceeded : public Error {
 public:
  explicit GuardExceeded(const std::string& message)
      : Error(ErrorKind::kGuard, message) {}
};

class ConsistencyFailure : public Error {
 public:
  explicit ConsistencyFailure(const std::string& message)
      : Error(ErrorKind::kConsistency, message) {}
};

class NotNefError : public Error {
 public:
  explicit NotNefError(const std::string& message)
      : Error(ErrorKind::kNotNef, message) {}
};

}  // namespace eqpos
