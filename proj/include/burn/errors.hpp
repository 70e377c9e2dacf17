#pragma once

#include <stdexcept>

namespace burn {

// Malformed caller input: bad graphs, schedules, specs, files.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The instance exceeds a configured cap (materialization size, solver size).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace burn
