#pragma once

#include <stdexcept>
#include <string>

namespace chainfill {

// Malformed input: files, flags, inconsistent dimensions.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// A certified inequality or exact identity failed. Always a hard stop.
struct InvariantViolation : std::runtime_error {
    explicit InvariantViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// No admissible split radius was found; indicates insufficient sampling of the
// growth function or a numeric contradiction. Never ignored silently.
struct NoSplitRadius : std::runtime_error {
    explicit NoSplitRadius(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace chainfill
