#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qdensity {

/// Raised when a computation would exceed a configured size or work cap
/// (oracle bound, sieve period, term count).
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax or semantic error in a subset description.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace qdensity
