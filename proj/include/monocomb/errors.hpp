#pragma once

#include <stdexcept>
#include <string>

namespace monocomb {

/// Base class for every error the pipeline raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs that should share dimensions do not.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A value violates a mathematical precondition (depth <= 0, negative noise, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A value cannot be represented in the target encoding.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A file does not conform to the expected wire format.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// File system level failure (missing file, unreadable, ...).
class IoError : public Error {
 public:
  using Error::Error;
};

/// An evaluation was requested over zero pixels.
class EmptyDomainError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs at least one valid pixel got none.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// A documented call precondition was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration file or command line.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A synthetic scene description is not renderable.
class SceneError : public Error {
 public:
  using Error::Error;
};

}  // namespace monocomb
