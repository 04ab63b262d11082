#pragma once

#include <stdexcept>
#include <string>

namespace pml {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Bad user input: negative weights, mismatched sizes, out-of-tolerance pmfs.
struct ValidationError : Error {
  explicit ValidationError(const std::string& msg) : Error("validation", msg) {}
};

// A construction would exceed the configured atom budget.
struct CapacityError : Error {
  explicit CapacityError(const std::string& msg) : Error("capacity", msg) {}
};

// A view puts mass on an atom outside the base measure's support.
struct AbsContinuityError : Error {
  explicit AbsContinuityError(const std::string& msg)
      : Error("absolute_continuity", msg) {}
};

// An iterative solver failed to reach its tolerance.
struct NotConvergedError : Error {
  explicit NotConvergedError(const std::string& msg)
      : Error("not_converged", msg) {}
};

// API misuse (e.g. querying a process after the fast path consumed it).
struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error("usage", msg) {}
};

}  // namespace pml
