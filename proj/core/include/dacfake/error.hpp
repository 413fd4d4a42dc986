#pragma once

#include <stdexcept>
#include <string>

namespace dacfake {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input file / column-mapping problems (missing column, bad header, ...).
// The CLI maps these to exit code 2.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Bad run configuration (unknown classifier name, invalid threshold, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Violated data preconditions at runtime (NaN in matrix, single-class
// labels, row-count mismatch between artifacts, ...).
class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace dacfake
