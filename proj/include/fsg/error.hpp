#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fsg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph or state space would exceed the supported vertex count.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// A family constructor or operation received parameters outside its domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A vertex, position or rank lies outside its valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The requested computation does not fit the configured memory or state
/// budget. No partial answer is ever returned in place of this error.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::uint64_t states_visited = 0)
      : Error(what), states_visited_(states_visited) {}

  std::uint64_t states_visited() const { return states_visited_; }

 private:
  std::uint64_t states_visited_;
};

}  // namespace fsg
