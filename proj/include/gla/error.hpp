#pragma once

#include <stdexcept>
#include <string>

namespace gla {

/// Classification of failures crossing module boundaries.  The CLI and the
/// C API map these onto their exit codes / status values.
enum class ErrorKind {
  BadInput,        ///< malformed or mathematically inadmissible input
  Truncation,      ///< the request reaches past the known degree range
  ExactViolation,  ///< an exactly-checked identity failed: internal bug sentinel
  Internal,        ///< invariant breakage inside the kernel
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace gla
