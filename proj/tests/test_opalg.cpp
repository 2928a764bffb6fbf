#include "qlt/algebra.hpp"
#include "qlt/errors.hpp"
#include "qlt/exprlang.hpp"

#include "random_expr.hpp"

#include <doctest.h>

using namespace qlt;

namespace {
const AlgebraSpec& rel = relativistic_algebra();

OpExpr parsed(const char* text) {
    return parse(text, rel);
}
} // namespace

TEST_CASE("expr_combine basics") {
    CHECK((parsed("x") - parsed("x")).is_zero());
    CHECK(parsed("x") * parsed("p") == parsed("x*p"));
    // scaling by 1/(2mc^2) produces the leading symmetrized boost term
    OpExpr scaled = parsed("H*x + x*H").scaled(
        (Scalar::from_rational(2) * Scalar::mass() * Scalar::c(2)).inverse());
    CHECK(scaled == parsed("(H*x + x*H)/(2*m*c^2)"));
}

TEST_CASE("combining expressions over different algebras is rejected") {
    OpExpr a = parse("x", rel);
    OpExpr b = parse("x", nonrelativistic_algebra());
    CHECK_THROWS_AS(a + b, algebra_mismatch);
    CHECK_THROWS_AS(a * b, algebra_mismatch);
}

TEST_CASE("normalize: defining relation and mass shell") {
    CHECK(normalize(parsed("p*x"), rel) == normalize(parsed("x*p - i*hbar"), rel));
    CHECK(normalize(parsed("H*x - x*H"), rel) == normalize(parsed("-i*hbar*c^2*p*H^-1"), rel));
    CHECK(normalize(parsed("H^2*x - x*H^2"), rel) == normalize(parsed("-2*i*hbar*c^2*p"), rel));
    CHECK(normalize(parsed("p^2"), rel) == normalize(parsed("c^-2*H^2 - m^2*c^2"), rel));
}

TEST_CASE("normalize respects the step budget") {
    OpExpr big = parsed("H^3*x^3*p*x");
    NormalizeOptions opts;
    opts.step_budget = 2;
    CHECK_THROWS_AS(normalize(big, rel, opts), reduction_budget_error);
}

TEST_CASE("equals") {
    CHECK(equals(parsed("H*t"), parsed("t*H"), rel));
    CHECK_FALSE(equals(parsed("x*p"), parsed("p*x"), rel));
}

TEST_CASE("brackets") {
    CHECK(commutator(parsed("x"), parsed("p"), rel) == parsed("i*hbar"));
    CHECK(commutator(parsed("H"), parsed("t"), rel).is_zero());
    CHECK(symmetrized(parsed("H"), parsed("x"), rel) ==
          normalize(parsed("x*H - (i/2)*hbar*c^2*p*H^-1"), rel));
    CHECK(brackets(parsed("x"), parsed("p"), BracketKind::Anticommutator, rel) ==
          normalize(parsed("2*x*p - i*hbar"), rel));
}

TEST_CASE("adjoint basics") {
    CHECK(adjoint(parsed("i"), rel) == parsed("-i"));
    CHECK(adjoint(parsed("x*p"), rel) == normalize(parsed("x*p - i*hbar"), rel));
}

TEST_CASE("property: normalize is idempotent") {
    std::mt19937 rng(7);
    for (int k = 0; k < 200; ++k) {
        OpExpr e = testing::random_expr(rng, rel);
        OpExpr n1 = normalize(e, rel);
        CHECK(normalize(n1, rel) == n1);
    }
}

TEST_CASE("property: strategy-independent canonical forms (confluence witness)") {
    std::mt19937 rng(11);
    for (int k = 0; k < 200; ++k) {
        OpExpr e = testing::random_expr(rng, rel);
        OpExpr left = normalize(e, rel, {Strategy::LeftmostFirst, 1'000'000});
        OpExpr right = normalize(e, rel, {Strategy::RightmostFirst, 1'000'000});
        CHECK(left == right);
    }
}

TEST_CASE("property: normalize is linear") {
    std::mt19937 rng(13);
    for (int k = 0; k < 100; ++k) {
        OpExpr a = testing::random_expr(rng, rel);
        OpExpr b = testing::random_expr(rng, rel);
        CHECK(normalize(a + b, rel) == normalize(a, rel) + normalize(b, rel));
        Scalar s = Scalar::from_gaussian({Rational(3, 2), Rational(-1)});
        CHECK(normalize(a.scaled(s), rel) == normalize(a, rel).scaled(s));
    }
}

TEST_CASE("property: equals is an equivalence relation") {
    std::mt19937 rng(17);
    for (int k = 0; k < 50; ++k) {
        OpExpr a = testing::random_expr(rng, rel, 4);
        OpExpr b = testing::random_expr(rng, rel, 4);
        OpExpr c = testing::random_expr(rng, rel, 4);
        CHECK(equals(a, a, rel));
        CHECK(equals(a, b, rel) == equals(b, a, rel));
        // transitivity on constructed equal pairs
        OpExpr a2 = a + (b - b);
        OpExpr a3 = a + (c - c);
        CHECK(equals(a, a2, rel));
        CHECK(equals(a2, a3, rel));
        CHECK(equals(a, a3, rel));
    }
}

TEST_CASE("property: commutator antisymmetry and Jacobi identity") {
    std::mt19937 rng(19);
    for (int k = 0; k < 40; ++k) {
        OpExpr a = testing::random_expr(rng, rel, 2, 2);
        OpExpr b = testing::random_expr(rng, rel, 2, 2);
        OpExpr c = testing::random_expr(rng, rel, 2, 2);
        CHECK(commutator(a, b, rel) == normalize(-commutator(b, a, rel), rel));
        OpExpr jacobi = commutator(a, commutator(b, c, rel), rel) +
                        commutator(b, commutator(c, a, rel), rel) +
                        commutator(c, commutator(a, b, rel), rel);
        CHECK(normalize(jacobi, rel).is_zero());
    }
}

TEST_CASE("property: adjoint is an involution and antihomomorphism") {
    std::mt19937 rng(23);
    for (int k = 0; k < 60; ++k) {
        OpExpr a = testing::random_expr(rng, rel, 3, 2);
        OpExpr b = testing::random_expr(rng, rel, 3, 2);
        CHECK(adjoint(adjoint(a, rel), rel) == normalize(a, rel));
        CHECK(adjoint(a * b, rel) == normalize(adjoint(b, rel) * adjoint(a, rel), rel));
    }
}
