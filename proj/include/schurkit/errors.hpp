#ifndef SCHURKIT_ERRORS_HPP
#define SCHURKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schurkit {

// Error in a textual input (bundle DSL, polynomial/class expressions,
// JSON payloads). `position` is a 0-based character offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Violated precondition of a library operation (rank mismatch, bad degree,
// partition outside the allowed range, ...). Maps to CLI usage errors.
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& message) : std::invalid_argument(message) {}
};

} // namespace schurkit

#endif
