#include "qlt/kinematics.hpp"

#include "qlt/errors.hpp"

#include <cmath>

namespace qlt::kinematics {

namespace {

constexpr double kShellTolerance = 1e-12;

void check_on_shell(const ParticleState& s, const Constants& k) {
    double lhs = s.energy * s.energy;
    double rhs = s.momentum * s.momentum * k.c * k.c + s.m * s.m * std::pow(k.c, 4);
    if (std::abs(lhs - rhs) > kShellTolerance * std::max(std::abs(lhs), std::abs(rhs))) {
        throw numeric_domain_error("particle state is off the mass shell");
    }
    if (std::abs(s.velocity) >= k.c) {
        throw numeric_domain_error("particle velocity is not subluminal");
    }
}

} // namespace

Event boost_classical(const Event& e, double v, const Constants& k) {
    if (std::abs(v) >= k.c) {
        throw numeric_domain_error("boost velocity must satisfy |v| < c");
    }
    double gamma = 1.0 / std::sqrt(1.0 - (v * v) / (k.c * k.c));
    return {gamma * (e.t - v * e.x / (k.c * k.c)), gamma * (e.x - v * e.t)};
}

Event boost_energy_form(const Event& e, const ParticleState& s, const Constants& k) {
    if (s.m <= 0.0) {
        throw numeric_domain_error("energy-form boost requires a massive particle");
    }
    check_on_shell(s, k);
    double mc2 = s.m * k.c * k.c;
    return {(s.energy * e.t - s.momentum * e.x) / mc2,
            (s.energy * e.x - k.c * k.c * s.momentum * e.t) / mc2};
}

ParticleState shell_relations(std::optional<double> energy, std::optional<double> momentum,
                              std::optional<double> velocity, double m, const Constants& k) {
    int given = (energy ? 1 : 0) + (momentum ? 1 : 0) + (velocity ? 1 : 0);
    if (given < 1 || given > 2) {
        throw numeric_domain_error("shell_relations needs one or two of {E, p, v}");
    }
    if (m <= 0.0) {
        throw numeric_domain_error("shell_relations requires m > 0");
    }
    double c2 = k.c * k.c;
    double mc2 = m * c2;

    ParticleState s;
    s.m = m;
    if (given == 1) {
        // m plus a single variable pins the (forward-energy) state
        if (velocity) {
            if (std::abs(*velocity) >= k.c) {
                throw numeric_domain_error("velocity must be subluminal");
            }
            double gamma = 1.0 / std::sqrt(1.0 - *velocity * *velocity / c2);
            s.velocity = *velocity;
            s.energy = gamma * mc2;
            s.momentum = gamma * m * *velocity;
        } else if (momentum) {
            s.momentum = *momentum;
            s.energy = std::sqrt(s.momentum * s.momentum * c2 + mc2 * mc2);
            s.velocity = s.momentum * c2 / s.energy;
        } else {
            if (*energy < mc2) {
                throw numeric_domain_error("energy below rest energy");
            }
            s.energy = *energy;
            s.momentum = std::sqrt(s.energy * s.energy - mc2 * mc2) / k.c;
            s.velocity = s.momentum * c2 / s.energy;
        }
        check_on_shell(s, k);
        return s;
    }
    if (energy && momentum) {
        s.energy = *energy;
        s.momentum = *momentum;
        s.velocity = s.momentum * c2 / s.energy;
    } else if (momentum && velocity) {
        s.momentum = *momentum;
        s.velocity = *velocity;
        if (std::abs(s.velocity) >= k.c) {
            throw numeric_domain_error("velocity must be subluminal");
        }
        s.energy = s.velocity == 0.0 ? mc2 : s.momentum * c2 / s.velocity;
        if (s.velocity == 0.0 && s.momentum != 0.0) {
            throw numeric_domain_error("v = 0 requires p = 0");
        }
    } else {
        s.energy = *energy;
        s.velocity = *velocity;
        if (std::abs(s.velocity) >= k.c) {
            throw numeric_domain_error("velocity must be subluminal");
        }
        s.momentum = s.energy * s.velocity / c2;
    }

    if (s.energy < mc2 * (1.0 - kShellTolerance)) {
        throw numeric_domain_error("energy below rest energy");
    }
    check_on_shell(s, k);
    return s;
}

double spacelike_window(double m, const Constants& k) {
    if (m <= 0.0) {
        throw numeric_domain_error("spacelike window requires m > 0");
    }
    return k.hbar / (2.0 * m * k.c);
}

std::string to_string(Classification c) {
    switch (c) {
    case Classification::Timelike: return "timelike";
    case Classification::Lightlike: return "lightlike";
    case Classification::SpacelikeAllowed: return "spacelike-allowed";
    case Classification::SpacelikeSuppressed: return "spacelike-suppressed";
    }
    return "?";
}

TunnelResult tunnel_probability(const Event& e, double m, const Constants& k) {
    double interval = k.c * k.c * e.t * e.t - e.x * e.x;
    TunnelResult r;
    if (interval > 0.0) {
        r.classification = Classification::Timelike;
        return r;
    }
    double s = std::sqrt(std::fabs(interval)); // fabs avoids -0 on the cone
    double lambda_bar = k.hbar / (m * k.c);
    r.s = s;
    r.amplitude = std::exp(-s / lambda_bar);
    r.probability = std::exp(-2.0 * s / lambda_bar);
    if (interval == 0.0) {
        r.classification = Classification::Lightlike;
    } else {
        r.classification = s <= lambda_bar / 2.0 ? Classification::SpacelikeAllowed
                                                 : Classification::SpacelikeSuppressed;
    }
    return r;
}

} // namespace qlt::kinematics
