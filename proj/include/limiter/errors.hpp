#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace limiter {

/// Root of every error thrown by the library.
class LimiterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text: carries the 1-based position and the tokens that would
/// have been accepted there.
class SyntaxError : public LimiterError {
 public:
  SyntaxError(std::string message, std::size_t line, std::size_t column,
              std::set<std::string> expected = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::set<std::string> expected_;
};

/// Constructor applied to the wrong number of arguments.
class ArityError : public LimiterError {
 public:
  using LimiterError::LimiterError;
};

/// Well-formed text whose values violate a constructor invariant
/// (zero denominator, lo > hi, zero polynomial, ...).
class DomainError : public LimiterError {
 public:
  using LimiterError::LimiterError;
};

/// A cluster set would be empty.
class EmptySetError : public LimiterError {
 public:
  using LimiterError::LimiterError;
};

/// Sequence index below 1.
class IndexError : public LimiterError {
 public:
  using LimiterError::LimiterError;
};

/// The cluster set is not contained in the requested open set.
class NotANeighborhood : public LimiterError {
 public:
  using LimiterError::LimiterError;
};

/// Tail scan ran past the configured bound.
class HorizonExceeded : public LimiterError {
 public:
  using LimiterError::LimiterError;
};

/// Point is not a member of the given open set.
class NotMember : public LimiterError {
 public:
  using LimiterError::LimiterError;
};

}  // namespace limiter
