#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace permeq {

/// Base class for all permeq errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed cycle notation. `position` is a byte offset into the input text.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position(position) {}
  std::size_t position;
};

/// A documented size guard was exceeded. Guards are explicit limits, never
/// silent truncation.
struct GuardError : Error {
  using Error::Error;
};

/// A post-construction verification failed. This signals a bug in the
/// library, not bad input, and is surfaced loudly.
struct VerificationError : Error {
  using Error::Error;
};

/// The given point set is not invariant under the permutation.
struct NotFixedSetError : Error {
  NotFixedSetError(const std::string& what, unsigned escaping_point)
      : Error(what), escaping_point(escaping_point) {}
  unsigned escaping_point;
};

/// The permutation does not map the base sets of the r-cycles onto one
/// another.
struct NotInducedError : Error {
  using Error::Error;
};

}  // namespace permeq
