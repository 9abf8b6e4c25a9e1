#pragma once

#include <stdexcept>
#include <string>

namespace autoarc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (polynomials, job files).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

/// A computation exceeded a resource guard (degree, term count, variable count).
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& msg) : Error(msg) {}
};

/// An internal invariant failed at runtime.
class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& msg) : Error(msg) {}
};

/// A requested combination of inputs is not supported.
class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& msg) : Error(msg) {}
};

}  // namespace autoarc
