#include "qlt/algebra.hpp"

#include "qlt/errors.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace qlt {

AlgebraSpec::AlgebraSpec(std::string name, std::vector<GeneratorInfo> generators)
    : name_(std::move(name)), generators_(std::move(generators)) {}

int AlgebraSpec::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].name == name) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

void AlgebraSpec::add_commuting_pair(int left, int right) {
    commuting_[{left, right}] = true;
}

void AlgebraSpec::add_swap_rule(int left, int left_sign, int right, OpExpr replacement) {
    swap_rules_.emplace(std::make_tuple(left, left_sign, right), std::move(replacement));
}

void AlgebraSpec::add_power_rule(int gen, OpExpr square_replacement) {
    power_rules_.emplace(gen, std::move(square_replacement));
}

bool AlgebraSpec::commutes(int left, int right) const {
    return commuting_.count({left, right}) > 0;
}

const OpExpr* AlgebraSpec::swap_rule(int left, int left_sign, int right) const {
    auto it = swap_rules_.find(std::make_tuple(left, left_sign, right));
    return it == swap_rules_.end() ? nullptr : &it->second;
}

const OpExpr* AlgebraSpec::power_rule(int gen) const {
    auto it = power_rules_.find(gen);
    return it == power_rules_.end() ? nullptr : &it->second;
}

namespace {

OpExpr word_expr(std::initializer_list<OpFactor> factors, Scalar coeff) {
    return OpExpr::word(OpWord(std::vector<OpFactor>(factors)), std::move(coeff));
}

Scalar i_hbar() {
    return Scalar::imaginary_unit() * Scalar::hbar();
}

AlgebraSpec make_relativistic() {
    AlgebraSpec spec("rel", {
                                {"t", false, true},
                                {"x", false, true},
                                {"p", false, true},
                                {"H", true, true},
                            });
    const int t = 0, x = 1, p = 2, H = 3;

    // t is a central parameter; H and p commute.
    spec.add_commuting_pair(x, t);
    spec.add_commuting_pair(p, t);
    spec.add_commuting_pair(H, t);
    spec.add_commuting_pair(H, p);

    // p*x -> x*p - i*hbar
    spec.add_swap_rule(p, +1, x,
                       word_expr({{x, 1}, {p, 1}}, Scalar::one()) -
                           OpExpr::scalar(i_hbar()));

    // H*x -> x*H - i*hbar*c^2*p*H^-1
    spec.add_swap_rule(H, +1, x,
                       word_expr({{x, 1}, {H, 1}}, Scalar::one()) -
                           word_expr({{p, 1}, {H, -1}}, i_hbar() * Scalar::c(2)));

    // H^-1*x -> x*H^-1 + i*hbar*c^2*p*H^-3
    spec.add_swap_rule(H, -1, x,
                       word_expr({{x, 1}, {H, -1}}, Scalar::one()) +
                           word_expr({{p, 1}, {H, -3}}, i_hbar() * Scalar::c(2)));

    // p^2 -> c^-2*H^2 - m^2*c^2 (mass-shell, oriented to eliminate p powers >= 2)
    spec.add_power_rule(p,
                        word_expr({{H, 2}}, Scalar::c(-2)) -
                            OpExpr::scalar(Scalar::mass(2) * Scalar::c(2)));
    return spec;
}

AlgebraSpec make_nonrelativistic() {
    AlgebraSpec spec("nonrel", {
                                   {"x", false, true},
                                   {"p", true, true},
                               });
    const int x = 0, p = 1;

    // p*x -> x*p - i*hbar
    spec.add_swap_rule(p, +1, x,
                       word_expr({{x, 1}, {p, 1}}, Scalar::one()) -
                           OpExpr::scalar(i_hbar()));

    // p^-1*x -> x*p^-1 + i*hbar*p^-2
    spec.add_swap_rule(p, -1, x,
                       word_expr({{x, 1}, {p, -1}}, Scalar::one()) +
                           word_expr({{p, -2}}, i_hbar()));
    return spec;
}

} // namespace

const AlgebraSpec& relativistic_algebra() {
    static const AlgebraSpec spec = make_relativistic();
    return spec;
}

const AlgebraSpec& nonrelativistic_algebra() {
    static const AlgebraSpec spec = make_nonrelativistic();
    return spec;
}

const AlgebraSpec& algebra_by_name(const std::string& name) {
    if (name == "rel") {
        return relativistic_algebra();
    }
    if (name == "nonrel") {
        return nonrelativistic_algebra();
    }
    throw numeric_domain_error("unknown algebra '" + name + "' (expected 'rel' or 'nonrel')");
}

namespace {

enum class ViolationKind { None, Power, Order };

struct Violation {
    ViolationKind kind = ViolationKind::None;
    std::size_t index = 0;
};

bool power_violation_at(const std::vector<OpFactor>& fs, std::size_t i, const AlgebraSpec& spec) {
    return fs[i].power >= 2 && spec.power_rule(fs[i].gen) != nullptr;
}

bool order_violation_at(const std::vector<OpFactor>& fs, std::size_t i) {
    return i + 1 < fs.size() && fs[i].gen > fs[i + 1].gen;
}

Violation find_violation(const std::vector<OpFactor>& fs, const AlgebraSpec& spec,
                         Strategy strategy) {
    if (strategy == Strategy::LeftmostFirst) {
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (power_violation_at(fs, i, spec)) {
                return {ViolationKind::Power, i};
            }
            if (order_violation_at(fs, i)) {
                return {ViolationKind::Order, i};
            }
        }
    } else {
        for (std::size_t j = fs.size(); j-- > 0;) {
            if (order_violation_at(fs, j)) {
                return {ViolationKind::Order, j};
            }
            if (power_violation_at(fs, j, spec)) {
                return {ViolationKind::Power, j};
            }
        }
    }
    return {};
}

OpWord splice(const std::vector<OpFactor>& fs, std::size_t begin, std::size_t end) {
    return OpWord(std::vector<OpFactor>(fs.begin() + static_cast<std::ptrdiff_t>(begin),
                                        fs.begin() + static_cast<std::ptrdiff_t>(end)));
}

} // namespace

NormalizeResult normalize_counted(const OpExpr& e, const AlgebraSpec& spec,
                                  NormalizeOptions opts) {
    OpExpr result = OpExpr::zero(spec.name());
    std::vector<std::pair<OpWord, Scalar>> pending(e.terms().begin(), e.terms().end());
    std::uint64_t steps = 0;

    while (!pending.empty()) {
        auto [word, coeff] = std::move(pending.back());
        pending.pop_back();
        const auto& fs = word.factors();

        Violation v = find_violation(fs, spec, opts.strategy);
        if (v.kind == ViolationKind::None) {
            result.add_term(word, coeff);
            continue;
        }
        if (++steps > opts.step_budget) {
            throw reduction_budget_error("normalize exceeded step budget of " +
                                         std::to_string(opts.step_budget));
        }

        if (v.kind == ViolationKind::Power) {
            const OpExpr& rule = *spec.power_rule(fs[v.index].gen);
            OpWord pre = splice(fs, 0, v.index) *
                         OpWord::generator(fs[v.index].gen, fs[v.index].power - 2);
            OpWord post = splice(fs, v.index + 1, fs.size());
            for (const auto& [rw, rs] : rule.terms()) {
                pending.emplace_back(pre * rw * post, coeff * rs);
            }
            continue;
        }

        const OpFactor& left = fs[v.index];
        const OpFactor& right = fs[v.index + 1];
        if (spec.commutes(left.gen, right.gen)) {
            OpWord swapped = splice(fs, 0, v.index) * OpWord::generator(right.gen, right.power) *
                             OpWord::generator(left.gen, left.power) *
                             splice(fs, v.index + 2, fs.size());
            pending.emplace_back(std::move(swapped), std::move(coeff));
            continue;
        }

        const int sign = left.power > 0 ? +1 : -1;
        const OpExpr* rule = spec.swap_rule(left.gen, sign, right.gen);
        if (rule == nullptr || right.power <= 0) {
            throw std::logic_error("algebra '" + spec.name() + "' has no rewrite rule for " +
                                   spec.generator(left.gen).name + " past " +
                                   spec.generator(right.gen).name);
        }
        OpWord pre = splice(fs, 0, v.index) * OpWord::generator(left.gen, left.power - sign);
        OpWord post = OpWord::generator(right.gen, right.power - 1) *
                      splice(fs, v.index + 2, fs.size());
        for (const auto& [rw, rs] : rule->terms()) {
            pending.emplace_back(pre * rw * post, coeff * rs);
        }
    }

    return {std::move(result), steps};
}

OpExpr normalize(const OpExpr& e, const AlgebraSpec& spec, NormalizeOptions opts) {
    return normalize_counted(e, spec, opts).expr;
}

bool equals(const OpExpr& a, const OpExpr& b, const AlgebraSpec& spec) {
    return normalize(a - b, spec).is_zero();
}

OpExpr brackets(const OpExpr& a, const OpExpr& b, BracketKind kind, const AlgebraSpec& spec) {
    switch (kind) {
    case BracketKind::Commutator:
        return normalize(a * b - b * a, spec);
    case BracketKind::Anticommutator:
        return normalize(a * b + b * a, spec);
    case BracketKind::Symmetrized:
        return normalize((a * b + b * a).scaled(Scalar::from_rational(Rational(1, 2))), spec);
    }
    throw std::logic_error("unreachable bracket kind");
}

OpExpr adjoint(const OpExpr& e, const AlgebraSpec& spec) {
    OpExpr reversed = OpExpr::zero(spec.name());
    for (const auto& [w, s] : e.terms()) {
        reversed.add_term(w.reversed(), s.conj());
    }
    return normalize(reversed, spec);
}

} // namespace qlt
