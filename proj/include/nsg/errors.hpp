#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

// Base class for every domain error raised by this library. CLI maps these
// to exit code 1; anything else is a usage or internal error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// gcd of the generators is > 1, so the complement would be infinite.
struct NotCoprime : Error {
  using Error::Error;
};

// The complement of the requested gap set is not closed under addition.
struct NotClosed : Error {
  using Error::Error;
};

// lambda_inv was asked about an integer that is a gap.
struct NotMember : Error {
  using Error::Error;
};

// ominus(k, i) requested with i not below k in the semigroup order.
struct NotComparable : Error {
  using Error::Error;
};

// A named-family parameter violates its precondition, or a construction
// would exceed the supported conductor range.
struct InvalidParam : Error {
  using Error::Error;
};

// A sequence prefix does not expose enough of the tail to reconstruct.
struct PrefixTooShort : Error {
  using Error::Error;
};

// A sequence prefix contradicts itself during reconstruction.
struct InconsistentPrefix : Error {
  using Error::Error;
};

// Requested genus exceeds the enumerator's configured bitmap width.
struct LimitExceeded : Error {
  using Error::Error;
};

}  // namespace nsg
