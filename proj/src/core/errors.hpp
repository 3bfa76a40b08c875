#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Malformed or out-of-contract input (bad file, duplicate points, wrong
// dimensions, ...). Maps to exit code 2 at the CLI boundary.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configuration is valid but too large for exhaustive enumeration.
// Maps to exit code 3.
struct scale_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A broken internal invariant. Never expected on any input; indicates a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void check_internal(bool cond, const std::string& what) {
    if (!cond) throw internal_error(what);
}

} // namespace toric
