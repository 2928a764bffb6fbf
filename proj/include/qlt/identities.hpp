#pragma once

#include "qlt/algebra.hpp"
#include "qlt/opexpr.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qlt {

// A named operator identity: lhs == rhs over the named algebra.
struct Identity {
    std::string name;
    std::string algebra; // "rel" or "nonrel"
    OpExpr lhs;
    OpExpr rhs;
    std::string description;
};

struct VerificationReport {
    std::string name;
    bool pass = false;
    std::string residual; // rendered normalize(lhs - rhs); "0" iff pass
    std::uint64_t rule_applications = 0;
};

// The symmetrized boost operators and the time-of-arrival operator, built
// once per process:
//   xprime3, tprime3 — the fully symmetrized forms over rel
//   xprime5, tprime5 — the forms with t commuted out, over rel
//   tnon, hnon_inv   — time-of-arrival operator and 2*m*p^-2 over nonrel
struct BuiltinExpressions {
    OpExpr xprime3;
    OpExpr tprime3;
    OpExpr xprime5;
    OpExpr tprime5;
    OpExpr tnon;
    OpExpr hnon_inv;
};

const BuiltinExpressions& builtin_expressions();

// All registered identities in registration order.
const std::vector<Identity>& identity_registry();

// Verifies one identity; throws numeric_domain_error on unknown names.
VerificationReport verify_identity(const std::string& name);
VerificationReport verify_identity(const Identity& id);

// Verifies every registered identity, optionally filtered by algebra name.
std::vector<VerificationReport> verify_all(const std::string& algebra_filter = "");

} // namespace qlt
