#pragma once

#include <stdexcept>

namespace rankmod {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad text, mismatched alphabets, out-of-range indices.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// The requested code parameters cannot be realized by the construction.
class Infeasible : public Error {
public:
  using Error::Error;
};

/// An exhaustive step would exceed its configured enumeration budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// A certified property (usually a minimum distance) does not hold.
class CertificationFailure : public Error {
public:
  using Error::Error;
};

} // namespace rankmod
