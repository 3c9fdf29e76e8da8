#pragma once

#include <stdexcept>
#include <string>

namespace latpair {

// Bad user-supplied data: malformed JSON, dimension mismatches, violated
// operation preconditions.  CLI exit code 2.
class invalid_input : public std::runtime_error {
public:
    explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

// The input is well-formed but falls outside the supported hypotheses
// (triple root, p = 2, non-unit leading coefficient, F of infinite order,
// parity violations, ...).  CLI exit code 3.
class assumption_violated : public std::runtime_error {
public:
    explicit assumption_violated(const std::string& msg) : std::runtime_error(msg) {}
};

// A proved invariant failed at runtime.  Indicates a bug, never bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline void check_input(bool ok, const std::string& msg) {
    if (!ok) throw invalid_input(msg);
}

inline void check_assumption(bool ok, const std::string& msg) {
    if (!ok) throw assumption_violated(msg);
}

inline void check_internal(bool ok, const std::string& msg) {
    if (!ok) throw internal_error(msg);
}

} // namespace latpair
