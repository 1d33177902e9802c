#pragma once

#include <stdexcept>
#include <string>

namespace minrank {

// Invalid argument or configuration value. CLI exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Non-finite input, solver breakdown, or an internal numeric inconsistency. CLI exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or emitted data that violates its own invariant. CLI exit code 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// An exact search ran past its budget; callers fall back to a weaker bound.
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minrank
