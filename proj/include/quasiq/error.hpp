#pragma once

#include <stdexcept>
#include <string>

namespace quasiq {

// All validation and arithmetic failures in the library throw this type.
// Messages name the offending witness (element, pair, triple, ...) so that
// callers can surface them verbatim.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Failures of checks that are mathematically guaranteed for valid inputs.
// Hitting one of these signals a formula transcription bug, not bad input.
struct internal_error : error {
    explicit internal_error(const std::string& what)
        : error("internal consistency error: " + what) {}
};

}  // namespace quasiq
