#pragma once

#include <stdexcept>
#include <string>

namespace mono {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input data: wrong dimensions, bad normalization, malformed files.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A measure or formula was applied outside the domain where it is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace mono
