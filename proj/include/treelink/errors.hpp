#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace treelink {

// Raised by the text parsers (tree notation, words, PD codes) with the
// offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Raised when an exhaustive search would exceed its size guard.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace treelink
