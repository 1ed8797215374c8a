#pragma once

#include <stdexcept>
#include <string>

namespace fpkit {

// Input document or fixed-point data violates a structural invariant.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The data is well formed but cannot come from a consistent action
// (for instance a Chern number that should be integral is not).
class InconsistentDataError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class SearchSpaceTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace fpkit
