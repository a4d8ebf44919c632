#pragma once

#include <stdexcept>
#include <string>

namespace tsilab {

/// Thrown when an internal consistency check fails. Reaching this is a bug in
/// the library, never a consequence of bad user input; the CLI maps it to
/// exit code 1 (validation problems use std::invalid_argument and exit 2).
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace tsilab
