#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>

namespace qlt {

using Rational = boost::multiprecision::cpp_rational;

// a + b*i with exact rational a, b.
struct GaussianRational {
    Rational re;
    Rational im;

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    GaussianRational operator-() const { return {-re, -im}; }
    GaussianRational operator+(const GaussianRational& o) const { return {re + o.re, im + o.im}; }
    GaussianRational operator-(const GaussianRational& o) const { return {re - o.re, im - o.im}; }
    GaussianRational operator*(const GaussianRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianRational inverse() const;

    bool operator==(const GaussianRational& o) const = default;
};

// hbar^a * c^b * m^g with integer (possibly negative) exponents.
struct UnitMonomial {
    int hbar = 0;
    int c = 0;
    int m = 0;

    auto operator<=>(const UnitMonomial&) const = default;
};

// Exact Laurent polynomial in hbar, c, m over Gaussian rationals.
// Invariant: no stored coefficient is zero.
class Scalar {
public:
    Scalar() = default;

    static Scalar zero() { return {}; }
    static Scalar one() { return from_rational(1); }
    static Scalar imaginary_unit() { return term({0, 0, 0}, {0, 1}); }
    static Scalar from_rational(Rational q) { return term({0, 0, 0}, {std::move(q), 0}); }
    static Scalar from_gaussian(GaussianRational g) { return term({0, 0, 0}, std::move(g)); }
    static Scalar unit(UnitMonomial u) { return term(u, {1, 0}); }
    static Scalar term(UnitMonomial u, GaussianRational coeff);

    static Scalar hbar(int power = 1) { return unit({power, 0, 0}); }
    static Scalar c(int power = 1) { return unit({0, power, 0}); }
    static Scalar mass(int power = 1) { return unit({0, 0, power}); }

    bool is_zero() const { return terms_.empty(); }

    // True iff the scalar is a single monomial with a nonzero coefficient.
    bool is_invertible() const { return terms_.size() == 1; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o);

    // Inverse of a single-monomial scalar. Throws non_invertible_scalar otherwise.
    Scalar inverse() const;

    // Complex conjugation (i -> -i) of every coefficient.
    Scalar conj() const;

    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }

    const std::map<UnitMonomial, GaussianRational>& terms() const { return terms_; }

private:
    std::map<UnitMonomial, GaussianRational> terms_;
};

} // namespace qlt
