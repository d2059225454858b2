#pragma once

#include <stdexcept>
#include <string>

namespace stairgrid {

// Malformed caller input: duplicate letters, bad text formats, empty bases, …
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A staircase encoding whose cells fall outside the grid.
struct invalid_encoding : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Series division where the numerator's valuation cannot absorb the
// denominator's (dividing by x^v needs v leading zeros on both sides).
struct division_valuation_error : std::domain_error {
    using std::domain_error::domain_error;
};

// series_sqrt and friends outside their domain (constant term != 1, …).
struct series_domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// solve_fixed_point received a map that is not an x-adic contraction.
struct contraction_violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Work item exceeds a configured ceiling (names the offending subproblem).
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exposed coefficients must be integers; a surviving rational means a
// wiring bug somewhere upstream, so it is an error, never a rounding.
struct non_integer_coefficient_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cross-check between two independently computed tables failed.  Raised
// instead of silently trusting either side; indicates a bug, not bad input.
struct internal_consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace stairgrid
