#include "qlt/errors.hpp"
#include "qlt/exprlang.hpp"
#include "qlt/identities.hpp"

#include "random_expr.hpp"

#include <doctest.h>

using namespace qlt;

namespace {
const AlgebraSpec& rel = relativistic_algebra();
} // namespace

TEST_CASE("parse examples") {
    CHECK(normalize(parse("comm(x,p)", rel), rel) == parse("i*hbar", rel));
    CHECK(parse("(H*x + x*H - c^2*(p*t + t*p)) / (2*m*c^2)", rel) ==
          builtin_expressions().xprime3);
}

TEST_CASE("render examples") {
    CHECK(render(normalize(parse("p*x", rel), rel), rel) == "x*p - i*hbar");
    CHECK(render(OpExpr::zero("rel"), rel) == "0");
    CHECK(render(normalize(parse("comm(H^2,x)", rel), rel), rel) == "-2*i*hbar*c^2*p");
    CHECK(render(normalize(parse("comm(H,x)", rel), rel), rel) == "-i*hbar*c^2*p*H^-1");
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse("x^-1", rel), parse_error);
    CHECK_THROWS_AS(parse("q + x", rel), parse_error);
    CHECK_THROWS_AS(parse("t", nonrelativistic_algebra()), parse_error);
    CHECK_THROWS_AS(parse("x + ", rel), parse_error);
    CHECK_THROWS_AS(parse("x / p", rel), parse_error); // operator division rejected
    CHECK_THROWS_AS(parse("x / (hbar + c)", rel), parse_error);
    try {
        parse("x + $", rel);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset == 4);
    }
}

TEST_CASE("negative exponents require invertibility") {
    CHECK_THROWS_AS(parse("p^-1", rel), parse_error);
    CHECK(parse("H^-2", rel) == OpExpr::word(OpWord::generator(3, -2), Scalar::one(), "rel"));
    CHECK(parse("hbar^-1", rel) == OpExpr::scalar(Scalar::hbar(-1), "rel"));
}

TEST_CASE("scalar division binds like multiplication") {
    CHECK(parse("x/2/2", rel) ==
          parse("x", rel).scaled(Scalar::from_rational(Rational(1, 4))));
    CHECK(parse("i/hbar", rel) ==
          OpExpr::scalar(Scalar::imaginary_unit() * Scalar::hbar(-1), "rel"));
}

TEST_CASE("property: parse(render(e)) round-trips normalized expressions") {
    std::mt19937 rng(29);
    for (int k = 0; k < 150; ++k) {
        OpExpr e = normalize(testing::random_expr(rng, rel), rel);
        std::string text = render(e, rel);
        CHECK(parse(text, rel) == e);
        // printer is deterministic
        CHECK(render(e, rel) == text);
    }
}

TEST_CASE("round-trip holds for the nonrelativistic algebra too") {
    const AlgebraSpec& nr = nonrelativistic_algebra();
    std::mt19937 rng(31);
    for (int k = 0; k < 100; ++k) {
        OpExpr e = normalize(testing::random_expr(rng, nr), nr);
        CHECK(parse(render(e, nr), nr) == e);
    }
}
