#pragma once

#include <stdexcept>
#include <string>

namespace lgtw {

/// Base of every error the library throws on bad input or unmet preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input: bad files, invalid decompositions, etc.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An exact solver was asked to run past its configured size limit.
class LimitExceeded : public Error {
 public:
  LimitExceeded(const std::string& what_solver, int size, int limit)
      : Error(what_solver + ": instance size " + std::to_string(size) +
              " exceeds the limit of " + std::to_string(limit)),
        size_(size),
        limit_(limit) {}

  int size() const noexcept { return size_; }
  int limit() const noexcept { return limit_; }

 private:
  int size_;
  int limit_;
};

/// Raised when an internal guarantee fails; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lgtw
