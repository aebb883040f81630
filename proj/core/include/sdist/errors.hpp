#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdist {

/// Malformed textual input. `position` is a 0-based byte offset into the
/// text that was being parsed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        detail_(message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  /// The message without the position suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t position_;
};

/// A mathematical hypothesis of a bound or theorem does not hold for the
/// given input (a generator not vanishing on the points, s < d for the
/// plane-curve formula, a degree cap exceeded, ...).
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sdist
