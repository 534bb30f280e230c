#pragma once

#include <stdexcept>
#include <string>

namespace paracat {

enum class ErrorKind {
  Input,         // malformed tables, dangling labels, parse failures
  Unsupported,   // expression or type outside the supported fragment
  Resource,      // enumeration limit, step budget, cell budget
  Precondition,  // semantic precondition of an operation does not hold
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct InputError : Error {
  explicit InputError(const std::string& what) : Error(ErrorKind::Input, what) {}
};
struct UnsupportedError : Error {
  explicit UnsupportedError(const std::string& what) : Error(ErrorKind::Unsupported, what) {}
};
struct ResourceError : Error {
  explicit ResourceError(const std::string& what) : Error(ErrorKind::Resource, what) {}
};
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

// CLI exit code for an error kind: 2 for bad input, 3 for exhausted resources.
inline int exit_code_for(ErrorKind kind) { return kind == ErrorKind::Resource ? 3 : 2; }

}  // namespace paracat
