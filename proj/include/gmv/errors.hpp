#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmv {

/// Invalid argument to an operation (bad sizes, out-of-range parameters).
class ParameterError : public std::invalid_argument {
public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// An all-zero ternary code carries no direction and cannot be reconstructed.
class DegenerateCodeError : public std::runtime_error {
public:
  explicit DegenerateCodeError(const std::string& what) : std::runtime_error(what) {}
};

/// Linear algebra failure (singular system, non-finite objective).
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed file content; carries the byte offset of the first bad byte.
class FormatError : public std::runtime_error {
public:
  FormatError(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}
  std::size_t byte_offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// Raised when a metric cannot be computed at all (e.g. every input degenerate).
class EvaluationError : public std::runtime_error {
public:
  explicit EvaluationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gmv
