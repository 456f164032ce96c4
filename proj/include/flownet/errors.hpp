#pragma once

#include <stdexcept>
#include <string>

namespace flownet {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An instance or argument violates a structural precondition
/// (s == t, self-loop, unknown edge id, k out of range, ...).
class InvalidInstanceError : public Error {
 public:
  explicit InvalidInstanceError(const std::string& what) : Error(what) {}
};

/// Instance file text could not be parsed.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// A feasibility-style subproblem has no solution (no budget-feasible
/// cut, knapsack cover threshold unreachable, ...).
class InfeasibleError : public Error {
 public:
  explicit InfeasibleError(const std::string& what) : Error(what) {}
};

/// An exact enumeration was requested on an instance too large for it.
/// Guards are hard errors: oracles never truncate silently.
class SizeGuardError : public Error {
 public:
  explicit SizeGuardError(const std::string& what) : Error(what) {}
};

}  // namespace flownet
