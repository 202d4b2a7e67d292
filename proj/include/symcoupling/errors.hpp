#pragma once

#include <stdexcept>
#include <string>

namespace symcoupling {

/// Inputs outside an operation's mathematical domain (bad parity, empty
/// coupling range, inadmissible polynomial parameters).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iterative numerics that failed to meet their convergence contract.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed object violated a structural invariant that should hold by
/// construction (typically a phase-convention bug).
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace symcoupling
