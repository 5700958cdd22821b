#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qba {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different dimensions, or an index/mask does not fit n.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Shapes of matrices or vectors do not conform.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An operation was given an element in a basis it does not accept.
class BasisError : public Error {
 public:
  using Error::Error;
};

/// Lexing or parsing failed; `offset` is the byte offset into the source.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), detail_(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  /// The message without the offset suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

/// Evaluation of a well-formed expression failed (unknown variable, operator in classical context).
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qba
