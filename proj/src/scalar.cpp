#include "qlt/scalar.hpp"

#include "qlt/errors.hpp"

namespace qlt {

GaussianRational GaussianRational::inverse() const {
    Rational norm = re * re + im * im;
    if (norm == 0) {
        throw non_invertible_scalar("division by zero Gaussian rational");
    }
    return {re / norm, -im / norm};
}

Scalar Scalar::term(UnitMonomial u, GaussianRational coeff) {
    Scalar s;
    if (!coeff.is_zero()) {
        s.terms_.emplace(u, std::move(coeff));
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar out;
    for (const auto& [u, g] : terms_) {
        out.terms_.emplace(u, -g);
    }
    return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    for (const auto& [u, g] : o.terms_) {
        auto it = terms_.find(u);
        if (it == terms_.end()) {
            terms_.emplace(u, g);
        } else {
            it->second = it->second + g;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }
    return *this;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar out = *this;
    out += o;
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar out = *this;
    out += -o;
    return out;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar out;
    for (const auto& [ua, ga] : terms_) {
        for (const auto& [ub, gb] : o.terms_) {
            UnitMonomial u{ua.hbar + ub.hbar, ua.c + ub.c, ua.m + ub.m};
            out += term(u, ga * gb);
        }
    }
    return out;
}

Scalar Scalar::inverse() const {
    if (terms_.empty()) {
        throw non_invertible_scalar("cannot invert the zero scalar");
    }
    if (terms_.size() > 1) {
        throw non_invertible_scalar("cannot invert a multi-term scalar");
    }
    const auto& [u, g] = *terms_.begin();
    return term({-u.hbar, -u.c, -u.m}, g.inverse());
}

Scalar Scalar::conj() const {
    Scalar out;
    for (const auto& [u, g] : terms_) {
        out.terms_.emplace(u, g.conj());
    }
    return out;
}

} // namespace qlt
