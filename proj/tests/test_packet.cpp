#include "qlt/algebra.hpp"
#include "qlt/errors.hpp"
#include "qlt/exprlang.hpp"
#include "qlt/identities.hpp"
#include "qlt/packet.hpp"

#include <doctest.h>

#include <cmath>

using namespace qlt;
using namespace qlt::packet;

namespace {

const AlgebraSpec& rel = relativistic_algebra();

WavePacket standard_packet(int n = 1024) {
    return gaussian_packet(1.0, 0.5, 1.0, {20.0, n});
}

OpExpr op(const char* text) {
    return parse(text, rel);
}

} // namespace

TEST_CASE("gaussian packet moments") {
    WavePacket pk = standard_packet();
    CHECK(std::abs(expectation(op("1"), pk, 0.0) - 1.0) < 1e-12);
    std::complex<double> p_mean = expectation(op("p"), pk, 0.0);
    CHECK(std::abs(p_mean - 1.0) < 1e-10);
    std::complex<double> p_sq = expectation(op("p^2"), pk, 0.0);
    CHECK(std::abs(p_sq - p_mean * p_mean - 0.25) < 1e-8);
}

TEST_CASE("grid and containment preconditions") {
    CHECK_THROWS_AS(gaussian_packet(1.0, 0.5, 1.0, {20.0, 100}), numeric_domain_error);
    CHECK_THROWS_AS(gaussian_packet(1.0, 0.5, 1.0, {20.0, 32}), numeric_domain_error);
    CHECK_THROWS_AS(gaussian_packet(18.0, 0.5, 1.0, {20.0, 1024}), numeric_domain_error);
    CHECK_THROWS_AS(gaussian_packet(0.0, 10.0, 1.0, {20.0, 1024}), numeric_domain_error);
}

TEST_CASE("inverse pair acts as the identity") {
    WavePacket pk = standard_packet();
    OpWord hh_inv = OpWord::generator(rel.generator_index("H")) *
                    OpWord::generator(rel.generator_index("H"), -1);
    CHECK(hh_inv.empty()); // run-length merge collapses it exactly
    auto applied = apply_word(OpWord::generator(rel.generator_index("H")), pk, 0.0);
    auto undone =
        apply_word(OpWord::generator(rel.generator_index("H"), -1),
                   WavePacket{pk.grid, applied.values, pk.mass}, 0.0);
    for (std::size_t j = 0; j < pk.amplitudes.size(); ++j) {
        CHECK(std::abs(undone.values[j] - pk.amplitudes[j]) < 1e-12);
    }
}

TEST_CASE("position operator reproduces Fourier-pair analytics") {
    // momentum width sigma gives position spread 1/(2 sigma)
    WavePacket pk = standard_packet(2048);
    std::complex<double> x_sq = expectation(op("x^2"), pk, 0.0);
    double sigma_x = 1.0 / (2.0 * 0.5);
    CHECK(std::abs(x_sq.real() - sigma_x * sigma_x) < 1e-6);
    CHECK(std::abs(x_sq.imag()) < 1e-8);
}

TEST_CASE("energy expectation respects the operator bound") {
    for (double p0 : {0.0, 0.5, 1.0, 2.0}) {
        WavePacket pk = gaussian_packet(p0, 0.4, 1.0, {20.0, 1024});
        std::complex<double> h = expectation(op("H"), pk, 0.0);
        CHECK(h.real() >= pk.mass);
        CHECK(std::abs(h.imag()) < 1e-10);
    }
}

TEST_CASE("expectation is invariant under normal ordering") {
    WavePacket pk = standard_packet(2048);
    for (const char* text : {"p*x", "H*x", "x^2*H^2"}) {
        OpExpr raw = op(text);
        OpExpr canon = normalize(raw, rel);
        std::complex<double> a = expectation(raw, pk, 0.0);
        std::complex<double> b = expectation(canon, pk, 0.0);
        CAPTURE(text);
        CHECK(std::abs(a - b) < 1e-6);
    }
}

TEST_CASE("hermiticity of the symmetrized expressions") {
    WavePacket pk = standard_packet(2048);
    const auto& b = builtin_expressions();
    for (double t : {0.0, 0.5}) {
        CHECK(std::abs(expectation(b.xprime5, pk, t).imag()) < 1e-8);
        CHECK(std::abs(expectation(b.tprime5, pk, t).imag()) < 1e-8);
    }
    OpExpr sym_hx = symmetrized(op("H"), op("x"), rel);
    CHECK(std::abs(expectation(sym_hx, pk, 0.0).imag()) < 1e-8);
}

TEST_CASE("interval identity residual, spectral and finite differences") {
    WavePacket pk = gaussian_packet(1.0, 0.5, 1.0, {20.0, 4096});
    auto spectral = check_interval_identity(pk, 0.3, Differentiation::Spectral);
    CHECK(spectral.residual < 1e-6);
    auto fd = check_interval_identity(pk, 0.3, Differentiation::FiniteDifference4);
    CHECK(fd.residual < 1e-4);
}

TEST_CASE("ehrenfest slopes") {
    WavePacket still = gaussian_packet(0.0, 0.5, 1.0, {20.0, 1024});
    auto r0 = ehrenfest_check(still);
    CHECK(std::abs(r0.slope_measured) < 1e-10);
    CHECK(std::abs(r0.slope_predicted) < 1e-10);

    WavePacket moving = standard_packet(2048);
    auto r = ehrenfest_check(moving);
    CHECK(std::abs(r.slope_measured - r.slope_predicted) < 1e-8);
    CHECK(std::abs(r.velocity_bracket - r.velocity_shell) < 1e-8);
}
