#pragma once

#include <stdexcept>
#include <string>

namespace rigami {

enum class ErrorKind {
  Parse,      // malformed input file or number
  Validate,   // structurally invalid pattern / instance
  Precision,  // interval refinement hit the precision cap without a verdict
  Budget,     // search budget exceeded
  Io,         // file system failure
  Usage,      // bad arguments
  Internal,   // invariant violation, indicates a bug
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

}  // namespace rigami
