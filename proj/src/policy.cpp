#include "mextremal/policy.hpp"

#include "mextremal/error.hpp"

namespace mextremal {

namespace {
NumericPolicy& global_policy() {
  static NumericPolicy policy;
  return policy;
}
}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Numeric: return "numeric";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::NotReducible: return "not-reducible";
    case ErrorKind::Inconsistent: return "inconsistent";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

const NumericPolicy& numeric_policy() { return global_policy(); }

void set_numeric_policy(const NumericPolicy& policy) { global_policy() = policy; }

ScopedNumericPolicy::ScopedNumericPolicy(const NumericPolicy& policy)
    : saved_(global_policy()) {
  global_policy() = policy;
}

ScopedNumericPolicy::~ScopedNumericPolicy() { global_policy() = saved_; }

}  // namespace mextremal
