#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetbrackets {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A jet order or formal derivative order would exceed the context cap.
/// Raising the order silently would corrupt the differential identities,
/// so overflow is always a hard error.
struct OrderOverflow : Error {
  using Error::Error;
};

/// An index is outside the valid range of the ambient context.
struct RangeError : Error {
  using Error::Error;
};

/// An operand has a degree the operation does not accept.
struct DegreeError : Error {
  using Error::Error;
};

/// Two values built over different contexts were combined.
struct ContextMismatch : Error {
  using Error::Error;
};

/// Malformed source text. `offset` is the byte position of the failure.
struct ParseError : Error {
  std::size_t offset;
  ParseError(const std::string& msg, std::size_t off)
      : Error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

/// A configuration document is structurally or semantically invalid.
struct ConfigError : Error {
  using Error::Error;
};

/// The delta operator of a derived bracket is not square-zero on probes.
struct DeltaNotSquareZero : Error {
  using Error::Error;
};

/// A candidate Poisson multivector has a nonvanishing self-bracket.
struct PoissonCheckFailed : Error {
  using Error::Error;
};

/// A form expected to be purely horizontal still carries fiber covectors.
struct NotHorizontal : Error {
  using Error::Error;
};

} // namespace jetbrackets
