#pragma once

#include <optional>
#include <string>

namespace qlt::kinematics {

struct Constants {
    double hbar;
    double c;

    static Constants si() { return {1.054571817e-34, 2.99792458e8}; }
    static Constants natural() { return {1.0, 1.0}; }
};

struct Event {
    double t = 0.0;
    double x = 0.0;
};

// On-shell single-particle state: E^2 = p^2 c^2 + m^2 c^4, v = p c^2 / E.
struct ParticleState {
    double m = 0.0;
    double energy = 0.0;
    double momentum = 0.0;
    double velocity = 0.0;
};

// Standard boost of an event by frame velocity v. Throws numeric_domain_error
// for |v| >= c.
Event boost_classical(const Event& e, double v, const Constants& k);

// The same boost written through the particle's energy and momentum:
// t' = (E t - p x)/(m c^2), x' = (E x - c^2 p t)/(m c^2).
// Throws numeric_domain_error for m <= 0 or an off-shell state.
Event boost_energy_form(const Event& e, const ParticleState& s, const Constants& k);

// Completes (E, p, v) on the mass shell from one or two of them (the mass is
// always given; one variable already pins the forward-energy state).
// Inconsistent inputs throw numeric_domain_error.
ParticleState shell_relations(std::optional<double> energy, std::optional<double> momentum,
                              std::optional<double> velocity, double m, const Constants& k);

// Half-width of the allowed spacelike interval: hbar/(2 m c).
double spacelike_window(double m, const Constants& k);

enum class Classification {
    Timelike,
    Lightlike,
    SpacelikeAllowed,
    SpacelikeSuppressed,
};

std::string to_string(Classification c);

struct TunnelResult {
    Classification classification = Classification::Timelike;
    // Set for spacelike (and lightlike, where both are 1) events only.
    std::optional<double> s;           // sqrt(x^2 - c^2 t^2)
    std::optional<double> amplitude;   // exp(-s / lambda_bar)
    std::optional<double> probability; // exp(-2 s / lambda_bar)
};

// Classifies the event against the light cone and, on or outside it, returns
// the propagation amplitude and probability normalized to 1 at the cone.
// "SpacelikeAllowed" iff s <= lambda_bar / 2.
TunnelResult tunnel_probability(const Event& e, double m, const Constants& k);

} // namespace qlt::kinematics
