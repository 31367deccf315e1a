#pragma once

#include <stdexcept>

namespace loewner {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument lies outside an operation's stated domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Spectrum too close to singular for a reliable functional calculus.
class IllConditionedError : public Error {
 public:
  using Error::Error;
};

}  // namespace loewner
