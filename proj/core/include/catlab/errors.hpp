#pragma once

#include <stdexcept>
#include <string>

namespace catlab {

// Precondition on a numeric argument violated (m < 2, empty sample, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A closed form evaluated outside the range where it is known to hold.
class validity_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// Graph input that does not have the required shape (e.g. disconnected).
class structural_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Work or memory would exceed a configured guard.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace catlab
