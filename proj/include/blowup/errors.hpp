#ifndef BLOWUP_ERRORS_HPP
#define BLOWUP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blowup {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. `offset` is the byte position of the problem.
struct parse_error : error {
    parse_error(const std::string& what, std::size_t offset_)
        : error(what + " (at byte " + std::to_string(offset_) + ")"), offset(offset_) {}
    std::size_t offset;
};

/// Violated precondition: ring mismatch, bad index, zero divisor ideal, ...
struct argument_error : error {
    using error::error;
};

/// A configured resource cap was hit. Reported distinctly from mathematical
/// failure, of which the algorithms here have none.
struct resource_error : error {
    using error::error;
};

} // namespace blowup

#endif
