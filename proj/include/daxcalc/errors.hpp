#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace daxcalc {

/// Malformed text or document. `position` is a character offset into the
/// parsed text when one is meaningful.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position)),
          position_(position) {}
    explicit ParseError(const std::string& message)
        : std::runtime_error(message), position_(npos) {}

    std::size_t position() const noexcept { return position_; }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::size_t position_;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace daxcalc
