#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ocrkit {

/// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Short machine-parsable category, printed by the CLI as `error: <kind>: ...`.
  virtual const char* kind() const noexcept { return "error"; }
};

/// Operand shapes do not agree (vector lengths, layer sizes, matrix dims).
class DimensionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "dimension"; }
};

/// A value violates a documented invariant (non-PD covariance, bad config).
class InvalidArgument : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid-argument"; }
};

/// Training produced a non-finite error.
class DivergenceError : public Error {
 public:
  explicit DivergenceError(int epoch)
      : Error("training diverged at epoch " + std::to_string(epoch)), epoch_(epoch) {}
  int epoch() const noexcept { return epoch_; }
  const char* kind() const noexcept override { return "divergence"; }

 private:
  int epoch_;
};

/// Malformed input file; carries the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }
  const char* kind() const noexcept override { return "parse"; }

 private:
  std::size_t offset_;
};

class IoError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "io"; }
};

}  // namespace ocrkit
