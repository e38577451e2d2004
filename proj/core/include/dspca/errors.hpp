#pragma once

#include <stdexcept>
#include <string>

namespace dspca {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid argument or violated precondition.
class ParamError : public Error {
 public:
  explicit ParamError(const std::string& what) : Error(what) {}
};

/// Malformed input data (CSV parsing, file access, asymmetric matrices).
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(what) {}
};

}  // namespace dspca
