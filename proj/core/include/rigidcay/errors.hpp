#pragma once

#include <stdexcept>
#include <string>

namespace rigidcay {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A numeric or structural argument is outside its documented domain.
class InvalidParameterError : public Error {
public:
  using Error::Error;
};

/// An enumeration or construction would exceed the configured element cap.
class CapacityExceededError : public Error {
public:
  using Error::Error;
};

/// A generating set violates the symmetric / identity-free contract.
class InvalidGeneratorError : public Error {
public:
  using Error::Error;
};

/// A class partition of a generating set is empty, covering, or not a subset.
class InvalidPartitionError : public Error {
public:
  using Error::Error;
};

/// Input object does not satisfy an operation's precondition.
class InvalidInputError : public Error {
public:
  using Error::Error;
};

/// A coloring handed to the flex builder is not a NAC-coloring.
class InvalidColoringError : public Error {
public:
  using Error::Error;
};

/// An edge would receive both colors under a generator-class partition.
class AmbiguousColoringError : public Error {
public:
  using Error::Error;
};

/// Descriptor, element literal, or JSON text could not be parsed.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace rigidcay
