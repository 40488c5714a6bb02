#pragma once

#include <stdexcept>
#include <string>

namespace renorm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A product produced a pole deeper than the configured pole bound.
class FloorExceeded : public Error {
 public:
  using Error::Error;
};

/// Two series were compared whose validity windows do not overlap.
class IncomparableWindows : public Error {
 public:
  using Error::Error;
};

/// Linear maps built over different bases (family or truncation) were mixed.
class TruncationMismatch : public Error {
 public:
  using Error::Error;
};

/// A character or infinitesimal character is not connected to the required order.
class NotConnected : public Error {
 public:
  using Error::Error;
};

/// A degree or weight exceeds a supported cap.
class DegreeTooLarge : public Error {
 public:
  using Error::Error;
};

/// An operation required a homogeneous element of a single weight.
class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (rationals, tree codes, JSON documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value failed a structural check (not a character, not an infinitesimal character, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace renorm
