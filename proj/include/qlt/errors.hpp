#pragma once

#include <stdexcept>
#include <string>

namespace qlt {

// Exact-arithmetic errors.
struct non_invertible_scalar : std::runtime_error {
    explicit non_invertible_scalar(const std::string& what) : std::runtime_error(what) {}
};

// Mixing expressions built over different algebras.
struct algebra_mismatch : std::runtime_error {
    explicit algebra_mismatch(const std::string& what) : std::runtime_error(what) {}
};

// The rewrite engine exceeded its step budget; signals a misconfigured rule set.
struct reduction_budget_error : std::runtime_error {
    explicit reduction_budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Expression-text syntax error, with byte offset into the source string.
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

// Numeric precondition violations (superluminal frame, off-shell state, bad grid, ...).
struct numeric_domain_error : std::runtime_error {
    explicit numeric_domain_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qlt
