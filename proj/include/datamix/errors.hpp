#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace datamix {

/// Root of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad inputs: malformed files, invalid mixtures, dimension mismatches.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Numeric failures: singular systems, degenerate distributions.
class NumericError : public Error {
 public:
  using Error::Error;
};

class AllZeroError : public DataError {
 public:
  AllZeroError() : DataError("normalize: no strictly positive weight") {}
};

class NegativeWeightError : public DataError {
 public:
  using DataError::DataError;
};

class NonFiniteError : public DataError {
 public:
  using DataError::DataError;
};

class InvalidMixtureError : public DataError {
 public:
  using DataError::DataError;
};

class DimensionMismatchError : public DataError {
 public:
  using DataError::DataError;
};

class LengthMismatchError : public DataError {
 public:
  using DataError::DataError;
};

class InsufficientDataError : public DataError {
 public:
  using DataError::DataError;
};

class EmptyCatalogError : public DataError {
 public:
  using DataError::DataError;
};

class MissingTargetMetricError : public DataError {
 public:
  using DataError::DataError;
};

class UnknownDomainColumnError : public DataError {
 public:
  using DataError::DataError;
};

class WeightSumOutOfToleranceError : public DataError {
 public:
  using DataError::DataError;
};

/// Carries the 1-based line and column of the offending cell.
class ParseError : public DataError {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column)
      : DataError(std::move(message) + " (line " + std::to_string(line) +
                  ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SingularSystemError : public NumericError {
 public:
  using NumericError::NumericError;
};

class DegenerateAlphaError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace datamix
