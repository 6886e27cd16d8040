#pragma once

#include <stdexcept>
#include <string>

namespace isoprod {

/// Failure categories. The CLI maps each to a distinct exit code.
enum class ErrorKind {
  Parse,       ///< malformed input text or data file
  Validation,  ///< well-formed input violating a mathematical precondition
  Assertion,   ///< an internal consistency check failed (integrality, rank, ...)
  Budget,      ///< an enumeration exceeded its configured budget
  Unsupported, ///< input outside the implemented scope
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& what)
      : std::runtime_error(module + ": " + what), kind_(kind), module_(std::move(module)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& module, const std::string& what) {
  throw Error(kind, module, what);
}

}  // namespace isoprod
