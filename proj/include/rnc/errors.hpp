#pragma once

#include <stdexcept>
#include <string>

namespace rnc {

// Invalid user-facing input (bad sequence, bad flag value, cap violation).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& m) : std::runtime_error(m) {}
};

// The stabilization window was exhausted without the series settling.
struct window_too_small : std::runtime_error {
    explicit window_too_small(const std::string& m) : std::runtime_error(m) {}
};

// A bidegree fiber of a candidate initial ideal had zero or several standard
// monomials: the ideal cannot be an initial ideal of the curve ideal.
struct fiber_violation : std::runtime_error {
    explicit fiber_violation(const std::string& m) : std::runtime_error(m) {}
};

// An internal consistency check failed; signals a bug, never bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& m) : std::logic_error(m) {}
};

}  // namespace rnc
