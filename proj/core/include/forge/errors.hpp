#pragma once

#include <stdexcept>
#include <string>

namespace forge {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (encoding 0, empty child list, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured budget was exceeded: evaluation bit cap, generation output
// cap, primality-test magnitude, search table size.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// A value the algorithm asserted to be prime is not (gap adjunction), or an
// oracle comparison failed.
class SoundnessError : public Error {
 public:
  using Error::Error;
};

// The improved recurrence failed to cover its window (indicates a window or
// exponent-bound bug).
class CompletenessError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. Position is a 1-based character index.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace forge
