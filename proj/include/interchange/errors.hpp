#pragma once

#include <stdexcept>
#include <string>

namespace interchange {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad family parameters, bad file records, i == j, ...
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Every weight is zero, or a vertex that must carry weight has none.
class DegenerateWeightError : public Error {
 public:
  using Error::Error;
};

// Quantity is only defined for connected weight functions (lmix = inf).
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

// Exact computation requested above its size cap.
class CapError : public Error {
 public:
  using Error::Error;
};

// Operands live on different symmetric groups.
class SizeMismatchError : public Error {
 public:
  using Error::Error;
};

// An internal identity that must hold did not (reported, never swallowed).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace interchange
