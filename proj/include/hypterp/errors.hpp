#pragma once

#include <stdexcept>
#include <string>

namespace hypterp {

// Failure categories; the CLI maps them to exit codes 2, 3, 4.

struct constraint_error : std::runtime_error {
    explicit constraint_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct convergence_error : std::runtime_error {
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct pole_error : std::runtime_error {
    explicit pole_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace hypterp
