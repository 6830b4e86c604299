#pragma once

// Error reporting shared by every module. Each failure carries a stable name
// (e.g. "NotCoprime") and a category that the command-line front end maps to
// an exit code.

#include <stdexcept>
#include <string>

namespace mfb {

enum class ErrorCategory {
  Domain,    // mathematically invalid input: exit code 1
  Bound,     // a configured size bound was exceeded: exit code 2
  Schema,    // malformed or inconsistent input file: exit code 3
  Internal,  // a consistency check failed; indicates a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, std::string name, const std::string& message)
      : std::runtime_error(message), category_(category), name_(std::move(name)) {}

  ErrorCategory category() const noexcept { return category_; }
  const std::string& name() const noexcept { return name_; }

 private:
  ErrorCategory category_;
  std::string name_;
};

[[noreturn]] inline void domain_error(const std::string& name, const std::string& msg) {
  throw Error(ErrorCategory::Domain, name, msg);
}
[[noreturn]] inline void bound_error(const std::string& msg) {
  throw Error(ErrorCategory::Bound, "BoundExceeded", msg);
}
[[noreturn]] inline void schema_error(const std::string& msg) {
  throw Error(ErrorCategory::Schema, "SchemaError", msg);
}
[[noreturn]] inline void internal_error(const std::string& msg) {
  throw Error(ErrorCategory::Internal, "InternalError", msg);
}

inline int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Domain: return 1;
    case ErrorCategory::Bound: return 2;
    case ErrorCategory::Schema: return 3;
    case ErrorCategory::Internal: return 4;
  }
  return 4;
}

}  // namespace mfb
