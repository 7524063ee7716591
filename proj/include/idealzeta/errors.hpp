#ifndef IDEALZETA_ERRORS_HPP_
#define IDEALZETA_ERRORS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace idealzeta {

/// Bad user input: malformed polynomial text, invalid parameters.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : InputError {
    ParseError(std::string const& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)),
          position(position) {}
    std::size_t position;
};

/// Vector/matrix dimensions do not agree.
struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An enumeration would exceed its configured ceiling. Never a
/// mathematical result: the caller must not read it as a zero count.
struct ResourceLimitExceeded : std::runtime_error {
    ResourceLimitExceeded(std::string const& what,
                          std::optional<std::uint64_t> index = std::nullopt)
        : std::runtime_error(what), index(index) {}
    /// The index k at which counting stopped, when known.
    std::optional<std::uint64_t> index;
};

} // namespace idealzeta

#endif /* IDEALZETA_ERRORS_HPP_ */
