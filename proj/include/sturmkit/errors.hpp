#pragma once

#include <stdexcept>
#include <string>

namespace sturmkit {

/// Raised when two independent computation paths that must agree do not.
/// This indicates a numerics bug in the toolkit, not a mathematical result;
/// the CLI maps it to its own exit code so it is never mistaken for a
/// failed check.
class internal_inconsistency_error : public std::runtime_error {
public:
    explicit internal_inconsistency_error(const std::string& what_arg)
        : std::runtime_error(what_arg) {}
};

} // namespace sturmkit
