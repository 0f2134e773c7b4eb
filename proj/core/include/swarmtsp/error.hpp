#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swarmtsp {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tour, matrix, or sequence sizes disagree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A sequence of city indices is not a permutation of 0..n-1.
class InvalidTourError : public Error {
 public:
  using Error::Error;
};

/// Instance construction rejected (no cities, non-finite coordinates, id gaps).
class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search refused because the instance exceeds the enumeration cap.
class InstanceTooLargeError : public Error {
 public:
  InstanceTooLargeError(std::size_t n, std::size_t limit)
      : Error("instance has " + std::to_string(n) + " cities; exact enumeration is limited to n <= " +
              std::to_string(limit)),
        n_(n),
        limit_(limit) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

/// A swap refers to a position outside the tour.
class VelocityError : public Error {
 public:
  using Error::Error;
};

/// Invalid solver, crossover, or experiment parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An aggregate was requested over no data.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text. `line()` is 1-based; 0 means "whole input".
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : Error(format(source, line, message)), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& source, std::size_t line, const std::string& message) {
    std::string out = source.empty() ? std::string("<input>") : source;
    if (line > 0) out += ":" + std::to_string(line);
    return out + ": " + message;
  }

  std::size_t line_;
};

/// Required section or keyword missing, or section contents inconsistent with the header.
class StructuralError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Input uses a format feature this library does not implement.
class UnsupportedFeatureError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Well-formed input whose values violate instance rules (e.g. duplicate node id).
class ValidationError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace swarmtsp
