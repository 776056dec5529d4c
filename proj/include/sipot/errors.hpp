#pragma once

#include <stdexcept>
#include <string>

namespace sipot {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or precondition violation by the caller.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Evaluation point outside the interior of a domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Morse-type parameters that admit no bound state.
class NoBoundStateError : public Error {
 public:
  using Error::Error;
};

class UnsupportedParameterError : public Error {
 public:
  using Error::Error;
};

/// Coordinate map with vanishing derivative or lost monotonicity.
class SingularMapError : public Error {
 public:
  using Error::Error;
};

/// A ladder truncation reaches past the bound-state region.
class TruncationTooLargeError : public Error {
 public:
  TruncationTooLargeError(const std::string& what, int first_offending_level)
      : Error(what), first_offending_level_(first_offending_level) {}
  int first_offending_level() const noexcept { return first_offending_level_; }

 private:
  int first_offending_level_;
};

/// Raising operator applied beyond the last bound level.
class LadderExhaustedError : public Error {
 public:
  using Error::Error;
};

}  // namespace sipot
