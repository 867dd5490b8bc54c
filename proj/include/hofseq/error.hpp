#pragma once

#include <stdexcept>
#include <string>

namespace hofseq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked arithmetic operation left the range of its integer type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An argument violated a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hofseq
