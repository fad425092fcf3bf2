#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gammax {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public Error {
 public:
  DivisionByZeroError() : Error("rational division by zero") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Two series with different x^p prefactors were combined additively.
class OffsetMismatchError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a specific leading coefficient (nonzero, or exactly 1 / 0).
class LeadingCoefficientError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// Pair solving reached g_m = 0, so v_m cannot be determined.
class DegeneratePairError : public Error {
 public:
  explicit DegeneratePairError(std::size_t index)
      : Error("g_" + std::to_string(index) + " vanishes; v_" + std::to_string(index) +
              " is undefined"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// v_0 was requested; the shift of the zeroth term has no value.
class UndefinedShiftError : public Error {
 public:
  UndefinedShiftError() : Error("v_0 is undefined (its term carries the zero power)") {}
};

/// The requested accuracy cannot be certified with the configured precision or limits.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gammax
