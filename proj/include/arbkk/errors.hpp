#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arbkk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs with inconsistent ambient dimensions or counts.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value outside the domain of an operation (empty polytope, zero
/// polynomial, point outside a function's domain, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in textual input; `offset` is the byte offset of the
/// offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Interval evaluation could not resolve a sign within the precision cap.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A listed cycle point is not a zero of polynomial number `index` (0-based).
class ResidualError : public Error {
 public:
  ResidualError(const std::string& what, std::size_t index) : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// A broken internal invariant (e.g. a negative mixed volume).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace arbkk
