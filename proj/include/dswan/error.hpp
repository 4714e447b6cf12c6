#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dswan {

/// Malformed textual input. `position` is a byte offset into the parsed text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A mathematical precondition of an operation does not hold
/// (context mismatch, zero divisor, non-monic input, ...).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dswan
