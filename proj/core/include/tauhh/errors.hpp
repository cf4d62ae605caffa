#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tauhh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad grammar, undefined identifiers, non-admissible
/// relation shapes, invalid bimodule data. Carries an optional source location.
class PresentationError : public Error {
 public:
  explicit PresentationError(const std::string& what, std::size_t line = 0,
                             std::size_t column = 0);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// No N <= cap with every length-N path reducing to zero.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// Operation requested on an input it does not support (e.g. a monomial-only
/// routine on a non-monomial presentation).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured size limit.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Two routes that must agree did not; always a bug upstream.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tauhh
