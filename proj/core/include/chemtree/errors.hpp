#ifndef CHEMTREE_ERRORS_HPP
#define CHEMTREE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chemtree {

// Raised for malformed textual input (tree grammar, JSON forms, CSV rows).
// `position` is a 0-based character offset into the offending text.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Raised when an operation's stated precondition does not hold
// (invalid order, infeasible tuple, theorem conditions failing, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace chemtree

#endif
