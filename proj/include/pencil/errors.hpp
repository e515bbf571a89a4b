#pragma once

#include <stdexcept>
#include <string>

namespace pencil {

// Malformed or inconsistent input. The CLI maps this to exit code 2.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A precondition of an algebraic construction is not met
// (e.g. an infeasible prescription passed to a constructor).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// The finite spectrum contains eigenvalues outside Q.
struct IrrationalSpectrum : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pencil
