#pragma once

#include <stdexcept>
#include <string>

namespace coloop {

// Malformed input: bad JSON, out-of-range indices, failed well-formedness checks.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural identity (d^2 = 0, coalgebra axioms, ...) failed on computed data.
class IdentityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace coloop
