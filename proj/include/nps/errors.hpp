#ifndef NPS_ERRORS_HPP
#define NPS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nps {

/// Base class for all errors raised by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed expression text; `position` is a 0-based offset into the input.
struct parse_error : error {
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// Input violates a documented precondition (composite characteristic,
/// zero polynomial, wild branch, inadmissible semigroup data, ...).
struct input_error : error {
    using error::error;
};

/// The requested quantity cannot be decided at the current truncation or
/// within the search window. Never silently converted into a number.
struct indeterminate_error : error {
    using error::error;
};

/// An internal cross-check failed. This is a bug trap, not a user error.
struct internal_error : error {
    using error::error;
};

} // namespace nps

#endif
