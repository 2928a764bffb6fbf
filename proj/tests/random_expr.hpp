#pragma once

#include "qlt/algebra.hpp"
#include "qlt/opexpr.hpp"

#include <random>

namespace qlt::testing {

// Random expression over the given spec with word degree <= max_degree and
// small Gaussian-rational coefficients. Deterministic for a given engine.
inline OpExpr random_expr(std::mt19937& rng, const AlgebraSpec& spec, int max_degree = 6,
                          int max_terms = 4) {
    std::uniform_int_distribution<int> term_count(1, max_terms);
    std::uniform_int_distribution<int> gen_pick(0, static_cast<int>(spec.generators().size()) - 1);
    std::uniform_int_distribution<int> coeff_pick(-3, 3);
    std::uniform_int_distribution<int> power_pick(1, 2);

    OpExpr e = OpExpr::zero(spec.name());
    int terms = term_count(rng);
    for (int i = 0; i < terms; ++i) {
        OpWord word;
        int degree = 0;
        while (degree < max_degree) {
            if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
                break;
            }
            int gen = gen_pick(rng);
            int power = power_pick(rng);
            if (spec.generator(gen).invertible &&
                std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
                power = -power;
            }
            if (degree + std::abs(power) > max_degree) {
                break;
            }
            word = word * OpWord::generator(gen, power);
            degree = word.degree();
        }
        GaussianRational g{coeff_pick(rng), coeff_pick(rng)};
        if (g.is_zero()) {
            g.re = 1;
        }
        e += OpExpr::word(word, Scalar::from_gaussian(g), spec.name());
    }
    return e;
}

} // namespace qlt::testing
