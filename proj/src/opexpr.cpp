#include "qlt/opexpr.hpp"

#include "qlt/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace qlt {

namespace {

// Append a factor, merging with the tail if the generator matches.
void push_factor(std::vector<OpFactor>& out, OpFactor f) {
    if (f.power == 0) {
        return;
    }
    if (!out.empty() && out.back().gen == f.gen) {
        out.back().power += f.power;
        if (out.back().power == 0) {
            out.pop_back();
        }
        return;
    }
    out.push_back(f);
}

} // namespace

OpWord::OpWord(std::vector<OpFactor> factors) {
    factors_.reserve(factors.size());
    for (const auto& f : factors) {
        push_factor(factors_, f);
    }
}

OpWord OpWord::generator(int gen, int power) {
    OpWord w;
    if (power != 0) {
        w.factors_.push_back({gen, power});
    }
    return w;
}

OpWord OpWord::operator*(const OpWord& o) const {
    OpWord out = *this;
    for (const auto& f : o.factors_) {
        push_factor(out.factors_, f);
    }
    return out;
}

OpWord OpWord::reversed() const {
    OpWord out;
    out.factors_.assign(factors_.rbegin(), factors_.rend());
    return out;
}

int OpWord::degree() const {
    int d = 0;
    for (const auto& f : factors_) {
        d += std::abs(f.power);
    }
    return d;
}

bool OpWord::operator<(const OpWord& o) const {
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    for (; a != factors_.end() && b != o.factors_.end(); ++a, ++b) {
        if (a->gen != b->gen) {
            return a->gen < b->gen;
        }
        if (a->power != b->power) {
            return a->power > b->power;
        }
    }
    // Strict prefixes (including the identity word) sort last.
    return b != o.factors_.end() && a == factors_.end() ? false
         : a != factors_.end() && b == o.factors_.end() ? true
         : false;
}

OpExpr OpExpr::zero(std::string algebra) {
    OpExpr e;
    e.algebra_ = std::move(algebra);
    return e;
}

OpExpr OpExpr::scalar(Scalar s, std::string algebra) {
    return word(OpWord::identity(), std::move(s), std::move(algebra));
}

OpExpr OpExpr::word(OpWord w, Scalar coeff, std::string algebra) {
    OpExpr e;
    e.algebra_ = std::move(algebra);
    e.add_term(w, coeff);
    return e;
}

void OpExpr::add_term(const OpWord& w, const Scalar& coeff) {
    if (coeff.is_zero()) {
        return;
    }
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void OpExpr::require_same_algebra(const OpExpr& o) const {
    if (!algebra_.empty() && !o.algebra_.empty() && algebra_ != o.algebra_) {
        throw algebra_mismatch("cannot combine expressions over algebras '" + algebra_ +
                               "' and '" + o.algebra_ + "'");
    }
}

std::string OpExpr::merged_algebra(const OpExpr& o) const {
    require_same_algebra(o);
    return algebra_.empty() ? o.algebra_ : algebra_;
}

OpExpr OpExpr::operator-() const {
    OpExpr out;
    out.algebra_ = algebra_;
    for (const auto& [w, s] : terms_) {
        out.terms_.emplace(w, -s);
    }
    return out;
}

OpExpr& OpExpr::operator+=(const OpExpr& o) {
    algebra_ = merged_algebra(o);
    for (const auto& [w, s] : o.terms_) {
        add_term(w, s);
    }
    return *this;
}

OpExpr OpExpr::operator+(const OpExpr& o) const {
    OpExpr out = *this;
    out += o;
    return out;
}

OpExpr OpExpr::operator-(const OpExpr& o) const {
    OpExpr out = *this;
    out += -o;
    return out;
}

OpExpr OpExpr::operator*(const OpExpr& o) const {
    OpExpr out;
    out.algebra_ = merged_algebra(o);
    for (const auto& [wa, sa] : terms_) {
        for (const auto& [wb, sb] : o.terms_) {
            out.add_term(wa * wb, sa * sb);
        }
    }
    return out;
}

OpExpr OpExpr::scaled(const Scalar& s) const {
    OpExpr out;
    out.algebra_ = algebra_;
    for (const auto& [w, coeff] : terms_) {
        out.add_term(w, coeff * s);
    }
    return out;
}

} // namespace qlt
