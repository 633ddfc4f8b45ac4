#pragma once

#include <stdexcept>
#include <string>

namespace khwb {

// Syntax error in a PD code or table file. `position` is a 0-based byte
// offset into the offending text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("parse error at " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A structural invariant failed: bad arc labels, d*d != 0, a non-commuting
// cube face, a chain map that does not commute with the differentials, ...
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A size guard was exceeded (state-count limits on cube construction).
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace khwb
