#pragma once

#include "qlt/opexpr.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlt {

struct GeneratorInfo {
    std::string name;
    bool invertible = false;
    bool self_adjoint = true;
};

// Generator set, canonical ordering (by index), and directed rewrite rules.
// Rules come in three kinds:
//   - commuting adjacent pairs (swapped wholesale),
//   - unit swap rules g^s * h -> replacement expression (s = +1 or -1),
//   - power reductions g^2 -> replacement expression, applied while power >= 2.
class AlgebraSpec {
public:
    AlgebraSpec(std::string name, std::vector<GeneratorInfo> generators);

    const std::string& name() const { return name_; }
    const std::vector<GeneratorInfo>& generators() const { return generators_; }

    int generator_index(const std::string& name) const; // -1 if unknown
    const GeneratorInfo& generator(int index) const { return generators_[index]; }

    void add_commuting_pair(int left, int right);
    void add_swap_rule(int left, int left_sign, int right, OpExpr replacement);
    void add_power_rule(int gen, OpExpr square_replacement);

    bool commutes(int left, int right) const;
    // Replacement for the unit product left^sign * right, if a rule exists.
    const OpExpr* swap_rule(int left, int left_sign, int right) const;
    const OpExpr* power_rule(int gen) const;

private:
    std::string name_;
    std::vector<GeneratorInfo> generators_;
    std::map<std::pair<int, int>, bool> commuting_;
    std::map<std::tuple<int, int, int>, OpExpr> swap_rules_;
    std::map<int, OpExpr> power_rules_;
};

// The operator algebra of the quantum Lorentz transformation: generators
// (t, x, p, H) with H invertible; t central; [x, p] = i*hbar;
// H*x -> x*H - i*hbar*c^2*p*H^-1; p^2 -> H^2/c^2 - m^2*c^2.
const AlgebraSpec& relativistic_algebra();

// Free nonrelativistic algebra: generators (x, p) with p invertible;
// [x, p] = i*hbar and its inverse-momentum consequence.
const AlgebraSpec& nonrelativistic_algebra();

// Lookup by CLI name ("rel" / "nonrel"); throws numeric_domain_error on
// unknown names.
const AlgebraSpec& algebra_by_name(const std::string& name);

enum class Strategy {
    LeftmostFirst,
    RightmostFirst,
};

struct NormalizeOptions {
    Strategy strategy = Strategy::LeftmostFirst;
    std::uint64_t step_budget = 1'000'000;
};

struct NormalizeResult {
    OpExpr expr;
    std::uint64_t steps = 0;
};

// Unique canonical form: every word ordered per spec, all directed
// reductions exhausted, zero terms dropped. Fixed point of itself.
// Throws reduction_budget_error if the step budget is exceeded.
OpExpr normalize(const OpExpr& e, const AlgebraSpec& spec, NormalizeOptions opts = {});
NormalizeResult normalize_counted(const OpExpr& e, const AlgebraSpec& spec,
                                  NormalizeOptions opts = {});

// True iff normalize(a - b) is the empty expression.
bool equals(const OpExpr& a, const OpExpr& b, const AlgebraSpec& spec);

enum class BracketKind {
    Commutator,     // ab - ba
    Anticommutator, // ab + ba
    Symmetrized,    // (ab + ba) / 2
};

// Bracket of two expressions, returned normalized.
OpExpr brackets(const OpExpr& a, const OpExpr& b, BracketKind kind, const AlgebraSpec& spec);

inline OpExpr commutator(const OpExpr& a, const OpExpr& b, const AlgebraSpec& spec) {
    return brackets(a, b, BracketKind::Commutator, spec);
}
inline OpExpr symmetrized(const OpExpr& a, const OpExpr& b, const AlgebraSpec& spec) {
    return brackets(a, b, BracketKind::Symmetrized, spec);
}

// Reverses each word, conjugates each coefficient, then normalizes.
// Every generator in both builtin algebras is self-adjoint.
OpExpr adjoint(const OpExpr& e, const AlgebraSpec& spec);

} // namespace qlt
