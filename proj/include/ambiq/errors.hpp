#pragma once

#include <stdexcept>
#include <string>

namespace ambiq {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A precondition on arguments was violated (bad sizes, mismatched grids, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

// A state or field does not fit on the requested grid (truncated tails).
class DomainTooSmall : public Error {
public:
  using Error::Error;
};

// An operation would move support off the grid (shears, long evolutions).
class DomainOverflow : public Error {
public:
  using Error::Error;
};

// A time integration blew up (norm growth beyond the allowed factor).
class NumericalInstability : public Error {
public:
  using Error::Error;
};

// Two redundant computation paths disagreed beyond tolerance.
class ConsistencyFailure : public Error {
public:
  using Error::Error;
};

}  // namespace ambiq
