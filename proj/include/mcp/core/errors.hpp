#pragma once

#include <stdexcept>

namespace mcp {

// Parameters that do not fit together (dimension mismatch, k > n, bad preset).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An eviction names a content that is not in the cache.
class InvalidEvictionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A decision that breaks the service protocol: missing eviction on a full
// cache, an eviction on a hit, or vectors of the wrong length.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The exhaustive offline search refused an instance above its budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A closed-form bound evaluated outside its domain (e.g. mk >= n).
class UndefinedBoundError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An offline schedule was requested for a sequence it was not built for.
class ScheduleMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mcp
