#pragma once

#include <stdexcept>
#include <string>

namespace listcode {

// Shape/length mismatch between operands (e.g. message vs. matrix rows).
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A value outside its documented domain (K > N, empty candidate list, ...).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input: hex polynomials, octal taps, config files.
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A tractability guard refused to run (override flag required).
struct guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace listcode
