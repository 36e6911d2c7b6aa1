#pragma once

#include <stdexcept>
#include <string>

namespace hardy {

/// Iteration or subdivision budget exhausted before reaching the target.
struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// Sign-change bracket could not be established within the expansion budget.
struct BracketFailure : std::runtime_error {
    explicit BracketFailure(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation requested outside a function's domain.
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Invalid construction parameter.
struct ParamError : std::invalid_argument {
    explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

/// Evaluation grid too small to contain the quantity of interest.
struct GridTooSmall : std::runtime_error {
    explicit GridTooSmall(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hardy
