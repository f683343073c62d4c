#pragma once

#include <stdexcept>
#include <string>

namespace bandforge {

// Base of everything the library throws on bad input or failed computation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on the mathematical input does not hold (odd p where a link
// is required, non-coprime pair, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Checked integer arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace bandforge
