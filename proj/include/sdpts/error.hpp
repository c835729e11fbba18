#pragma once

#include <stdexcept>
#include <string>

namespace sdpts {

// Base type for everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Unparseable file content (bad JSON, bad name/value line, ...).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally parsed input that breaks an invariant. The message carries the
// offending field path.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Minute/slot conversion outside the grid or off the slot raster.
class EncodingError : public Error {
 public:
  using Error::Error;
};

// Unknown or out-of-range employee/activity/slot/day reference.
class IdentifierError : public Error {
 public:
  using Error::Error;
};

// Model construction failure (inconsistent checkout roles, bad parameters).
class FormulationError : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration refused because the instance exceeds the cell cap.
class CapError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sdpts
