#pragma once

#include "qlt/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace qlt {

// One run-length factor: generator raised to a nonzero integer power.
struct OpFactor {
    int gen = 0;
    int power = 0;

    bool operator==(const OpFactor&) const = default;
};

// Ordered product of generator powers; adjacent factors always have
// distinct generator ids and all powers are nonzero.
class OpWord {
public:
    OpWord() = default;
    explicit OpWord(std::vector<OpFactor> factors);

    static OpWord identity() { return {}; }
    static OpWord generator(int gen, int power = 1);

    bool empty() const { return factors_.empty(); }
    const std::vector<OpFactor>& factors() const { return factors_; }

    // Concatenation, merging at the join.
    OpWord operator*(const OpWord& o) const;

    // Factor list reversed (powers kept); used by the adjoint.
    OpWord reversed() const;

    // Sum of |power| over factors.
    int degree() const;

    bool operator==(const OpWord&) const = default;

    // Deterministic ordering used for canonical printing and term storage:
    // lexicographic by (generator, then higher power first); a word that is
    // a strict prefix of another sorts after it, so the identity word is last.
    bool operator<(const OpWord& o) const;

private:
    std::vector<OpFactor> factors_;
};

// Finite formal sum of words with exact scalar coefficients.
// Invariant: no stored coefficient is zero.
class OpExpr {
public:
    OpExpr() = default;

    static OpExpr zero(std::string algebra = {});
    static OpExpr scalar(Scalar s, std::string algebra = {});
    static OpExpr word(OpWord w, Scalar coeff = Scalar::one(), std::string algebra = {});

    bool is_zero() const { return terms_.empty(); }
    const std::map<OpWord, Scalar>& terms() const { return terms_; }

    // Name of the algebra the expression is bound to; empty = unbound
    // (compatible with anything).
    const std::string& algebra() const { return algebra_; }

    OpExpr operator-() const;
    OpExpr operator+(const OpExpr& o) const;
    OpExpr operator-(const OpExpr& o) const;

    // Formal product: concatenates words factor-by-factor, no rewriting.
    OpExpr operator*(const OpExpr& o) const;

    OpExpr& operator+=(const OpExpr& o);

    // Multiplies every coefficient.
    OpExpr scaled(const Scalar& s) const;

    void add_term(const OpWord& w, const Scalar& coeff);

    bool operator==(const OpExpr& o) const { return terms_ == o.terms_; }

private:
    void require_same_algebra(const OpExpr& o) const;
    std::string merged_algebra(const OpExpr& o) const;

    std::map<OpWord, Scalar> terms_;
    std::string algebra_;
};

} // namespace qlt
