#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace montame {

/// Malformed textual input. `position` is a 0-based byte offset into the
/// offending string.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// A consistency condition that is guaranteed by theory failed at runtime.
/// This is never a user error; it signals a bug in the implementation.
/// The CLI maps it to exit code 2.
class InternalCheckError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace montame
