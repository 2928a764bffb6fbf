#include "qlt/errors.hpp"
#include "qlt/kinematics.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace qlt::kinematics;

namespace {
const Constants nat = Constants::natural();
const Constants si = Constants::si();
} // namespace

TEST_CASE("classical boost") {
    Event rest = boost_classical({0.0, 1.0}, 0.0, nat);
    CHECK(rest.t == 0.0);
    CHECK(rest.x == 1.0);

    Event b = boost_classical({0.0, 1.0}, 0.6, nat);
    CHECK(b.t == doctest::Approx(-0.75).epsilon(1e-14));
    CHECK(b.x == doctest::Approx(1.25).epsilon(1e-14));

    CHECK_THROWS_AS(boost_classical({0.0, 1.0}, 1.0, nat), qlt::numeric_domain_error);
}

TEST_CASE("classical boost preserves the interval") {
    std::mt19937 rng(37);
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    std::uniform_real_distribution<double> beta(-0.95, 0.95);
    for (int k = 0; k < 1000; ++k) {
        Event e{coord(rng), coord(rng)};
        double v = beta(rng);
        Event b = boost_classical(e, v, nat);
        double before = e.t * e.t - e.x * e.x;
        double after = b.t * b.t - b.x * b.x;
        CHECK(std::abs(after - before) < 1e-12 * std::max(1.0, std::abs(before)));
    }
}

TEST_CASE("energy-form boost") {
    ParticleState rest{1.0, 1.0, 0.0, 0.0};
    Event e = boost_energy_form({0.3, 1.0}, rest, nat);
    CHECK(e.t == 0.3);
    CHECK(e.x == 1.0);

    ParticleState s{1.0, 1.25, 0.75, 0.6};
    Event b = boost_energy_form({0.0, 1.0}, s, nat);
    CHECK(b.t == doctest::Approx(-0.75).epsilon(1e-14));
    CHECK(b.x == doctest::Approx(1.25).epsilon(1e-14));

    CHECK_THROWS_AS(boost_energy_form({0.0, 1.0}, ParticleState{0.0, 1.0, 1.0, 1.0}, nat),
                    qlt::numeric_domain_error);
    CHECK_THROWS_AS(boost_energy_form({0.0, 1.0}, ParticleState{1.0, 2.0, 0.75, 0.6}, nat),
                    qlt::numeric_domain_error);
}

TEST_CASE("energy form agrees with the classical boost on-shell") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> beta(-0.99, 0.99);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    std::uniform_real_distribution<double> mass(0.1, 10.0);
    for (int k = 0; k < 1000; ++k) {
        double m = mass(rng);
        ParticleState s = shell_relations(std::nullopt, std::nullopt, beta(rng), m, nat);
        Event e{coord(rng), coord(rng)};
        Event a = boost_classical(e, s.velocity, nat);
        Event b = boost_energy_form(e, s, nat);
        CHECK(std::abs(a.t - b.t) <= 1e-12 * std::max(1.0, std::abs(a.t)));
        CHECK(std::abs(a.x - b.x) <= 1e-12 * std::max(1.0, std::abs(a.x)));
    }
}

TEST_CASE("shell relations") {
    ParticleState rest = shell_relations(std::nullopt, std::nullopt, 0.0, 1.0, nat);
    CHECK(rest.energy == 1.0);
    CHECK(rest.momentum == 0.0);

    ParticleState s = shell_relations(std::nullopt, std::nullopt, 0.6, 1.0, nat);
    CHECK(s.energy == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(s.momentum == doctest::Approx(0.75).epsilon(1e-14));

    // closure: (E, p) -> v -> (E, p)
    ParticleState round = shell_relations(s.energy, s.momentum, std::nullopt, 1.0, nat);
    ParticleState back = shell_relations(std::nullopt, std::nullopt, round.velocity, 1.0, nat);
    CHECK(std::abs(back.energy - s.energy) < 1e-14);
    CHECK(std::abs(back.momentum - s.momentum) < 1e-14);

    CHECK_THROWS_AS(shell_relations(0.5, std::nullopt, 0.0, 1.0, nat),
                    qlt::numeric_domain_error);
    CHECK_THROWS_AS(shell_relations(1.0, 1.0, 1.0, 1.0, nat), qlt::numeric_domain_error);
}

TEST_CASE("spacelike window") {
    CHECK(spacelike_window(1.0, nat) == 0.5);
    CHECK(spacelike_window(9.1093837015e-31, si) == doctest::Approx(1.9308e-13).epsilon(1e-4));
    // 1/m law: monotone decreasing toward the classical limit
    double prev = spacelike_window(1.0, nat);
    for (double m = 2.0; m < 1e6; m *= 10.0) {
        double w = spacelike_window(m, nat);
        CHECK(w < prev);
        prev = w;
    }
    CHECK_THROWS_AS(spacelike_window(0.0, nat), qlt::numeric_domain_error);
}

TEST_CASE("tunnel probability at the window boundary") {
    double window = spacelike_window(1.0, nat); // lambda_bar / 2
    auto r = tunnel_probability({0.0, window}, 1.0, nat);
    CHECK(r.classification == Classification::SpacelikeAllowed);
    CHECK(*r.probability == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));

    auto cone = tunnel_probability({1.0, 1.0}, 1.0, nat);
    CHECK(cone.classification == Classification::Lightlike);
    CHECK(*cone.probability == 1.0);

    // s = lambda_bar reproduces the amplitude-level window estimate
    auto far = tunnel_probability({0.0, 2.0 * window}, 1.0, nat);
    CHECK(far.classification == Classification::SpacelikeSuppressed);
    CHECK(*far.amplitude == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    CHECK(*far.probability == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));

    auto inside = tunnel_probability({2.0, 1.0}, 1.0, nat);
    CHECK(inside.classification == Classification::Timelike);
    CHECK_FALSE(inside.probability.has_value());
}

TEST_CASE("probability equals amplitude squared and decreases in s") {
    double prev = 1.0;
    for (double x = 0.1; x < 3.0; x += 0.1) {
        auto r = tunnel_probability({0.0, x}, 1.0, nat);
        CHECK(*r.probability == doctest::Approx(*r.amplitude * *r.amplitude).epsilon(1e-15));
        CHECK(*r.probability < prev);
        prev = *r.probability;
        bool allowed = r.classification == Classification::SpacelikeAllowed;
        CHECK(allowed == (*r.s <= spacelike_window(1.0, nat)));
    }
}
