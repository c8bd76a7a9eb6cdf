#pragma once

#include <stdexcept>
#include <string>

namespace seifert {

// Rejected input: malformed graph text, parameters out of range, or a graph
// outside the domain of the requested computation. The CLI maps this to
// exit code 2.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal cross-check failed: two independent routes to the same value
// disagreed, or a solver left a nonzero residual. This is always a bug in the
// library, never bad input. The CLI maps this to exit code 1 so scripts can
// tell math bugs from user errors.
class consistency_error : public std::logic_error {
public:
    explicit consistency_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace seifert
