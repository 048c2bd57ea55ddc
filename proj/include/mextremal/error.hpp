#pragma once

#include <stdexcept>
#include <string>

namespace mextremal {

enum class ErrorKind {
  Domain,        // precondition or parameter-range violation
  Numeric,       // iteration failed to converge, solver failure
  Infeasible,    // interpolation data admits no interpolant into the closed disc
  NotReducible,  // Schur step applied to a unimodular constant
  Inconsistent,  // data contradicts the model (e.g. indefinite Pick data for a disc map)
  Schema,        // malformed JSON input
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string& what) {
  if (!condition) fail(kind, what);
}

}  // namespace mextremal
