#pragma once

#include <stdexcept>
#include <string>

namespace gsep {

// Raised when an enumeration or search hits its configured cap. Callers must
// treat the computation as indeterminate, never as a verdict.
class budget_exhausted_error : public std::runtime_error {
public:
    explicit budget_exhausted_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by strict-mode solvers when the input fails the precondition the
// strict check guards (e.g. the LexBFS ordering is not a bisimplicial
// elimination ordering, so the graph is outside the class).
class strict_mode_error : public std::runtime_error {
public:
    explicit strict_mode_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gsep
