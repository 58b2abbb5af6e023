#pragma once

#include <stdexcept>
#include <string>

namespace holo {

// Base class for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input: bad cycle notation, bad group spec string, bad JSON.
struct ParseError : Error {
  using Error::Error;
};

// A configured resource bound was exceeded (order caps, node budgets,
// table limits). Never silently truncates a result.
struct BoundError : Error {
  using Error::Error;
};

// Operation applied outside its domain, e.g. a decomposition that is
// only defined for perfect groups applied to a non-perfect group.
struct ScopeError : Error {
  using Error::Error;
};

// Internal consistency check failed. Indicates a bug, not bad input.
struct InvariantError : Error {
  using Error::Error;
};

}  // namespace holo
