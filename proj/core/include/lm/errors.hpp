#pragma once

#include <stdexcept>
#include <string>

namespace lm {

// Malformed input text (word grammar, sequence literals, JSON payloads).
// `position` is a 0-based character offset into the offending text.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

// Invalid mathematical object: singular matrix, discontinuous map,
// non-increasing piece, malformed prefix table, bad tree shape.
class ConstructionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A configured resource cap would be exceeded; carries a cost estimate.
class CapError : public std::runtime_error {
  public:
    CapError(const std::string& what, const std::string& estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    const std::string& estimate() const noexcept { return estimate_; }

  private:
    std::string estimate_;
};

}  // namespace lm
