#ifndef RCA_ERRORS_HPP
#define RCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rca {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (structure descriptions, element literals, ...).
struct ParseError : Error {
  using Error::Error;
};

// An operation was called on inputs violating its stated precondition
// (mixed carriers, non-continuous maps, axiom failures, ...).
struct PreconditionError : Error {
  using Error::Error;
};

// The requested combination is outside the supported catalog
// (e.g. cluster enumeration on the interval carrier).
struct UnsupportedError : Error {
  using Error::Error;
};

}  // namespace rca

#endif
