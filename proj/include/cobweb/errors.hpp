#pragma once

#include <stdexcept>
#include <string>

namespace cobweb {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension mismatch: non-conformable operands or a non-square input.
class ShapeError : public Error {
public:
  using Error::Error;
};

/// Invalid argument value (zero sizes, empty block lists, bad parameters).
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// An index outside the valid range of a matrix, block, or vertex set.
class BoundsError : public Error {
public:
  using Error::Error;
};

/// A feasibility bound of an exhaustive search was exceeded.
class SizeError : public Error {
public:
  using Error::Error;
};

/// The natural-join condition between two chains does not hold.
class JoinError : public Error {
public:
  using Error::Error;
};

/// Malformed text in one of the file formats.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace cobweb
