#pragma once

#include <stdexcept>
#include <string>

namespace tokenham {

// Invalid family parameters, out-of-range (m, n, k) and the like.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke a documented precondition (bad token vertex, bad
// Hamiltonian path, malformed input file).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Materialization would exceed the configured vertex cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced a sequence that failed its own checks. Seeing
// one of these is always a bug in the library.
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tokenham
