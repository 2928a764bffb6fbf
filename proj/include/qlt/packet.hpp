#pragma once

#include "qlt/opexpr.hpp"

#include <complex>
#include <vector>

namespace qlt::packet {

// Uniform momentum grid on [-p_max, p_max); n a power of two.
struct MomentumGrid {
    double p_max;
    int n;

    double dp() const { return 2.0 * p_max / n; }
    double point(int j) const { return -p_max + j * dp(); }
};

enum class Differentiation {
    Spectral,          // FFT-based derivative
    FiniteDifference4, // 4th-order central differences, periodic wrap
};

// Momentum-space wave packet in natural units (hbar = c = 1).
// Normalized so that sum |psi_j|^2 dp = 1.
struct WavePacket {
    MomentumGrid grid;
    std::vector<std::complex<double>> amplitudes;
    double mass;
};

// psi(p) = (2 pi sigma^2)^(-1/4) exp(-(p - p0)^2 / (4 sigma^2)), renormalized
// on the grid. Throws numeric_domain_error if the packet center is closer
// than 8 sigma to a grid edge or the grid is invalid.
WavePacket gaussian_packet(double p0, double sigma, double mass, const MomentumGrid& grid);

struct AppliedState {
    std::vector<std::complex<double>> values;
    bool accuracy_warning = false; // intermediate state not edge-contained
};

// Applies the word's factors right-to-left. p and H = sqrt(p^2 + m^2) act
// multiplicatively, x acts as i d/dp, t is scalar multiplication by the t
// argument. The word need not be canonical.
AppliedState apply_word(const OpWord& word, const WavePacket& pk, double t,
                        Differentiation scheme = Differentiation::Spectral);

// Linear extension of apply_word: coefficients are evaluated with
// hbar = c = 1 and m bound to the packet mass.
std::complex<double> expectation(const OpExpr& e, const WavePacket& pk, double t,
                                 Differentiation scheme = Differentiation::Spectral);

struct IntervalCheck {
    double residual;
    std::complex<double> lhs; // <c^2 t'^2 - x'^2> by full operator composition
    double rhs;               // c^2 t^2 - <x^2> + <H^-2>/4
};

// Independent numerical check of the boosted-interval identity: the left side
// is evaluated by composing the unnormalized boost operators, never through
// the symbolic rewrite engine.
IntervalCheck check_interval_identity(const WavePacket& pk, double t,
                                      Differentiation scheme = Differentiation::Spectral);

struct EhrenfestReport {
    double slope_measured;   // finite-difference slope of <x'>(t)
    double slope_predicted;  // -<p>/m
    double velocity_bracket; // <(i/hbar)[H, x]>
    double velocity_shell;   // <p H^-1>
};

EhrenfestReport ehrenfest_check(const WavePacket& pk,
                                Differentiation scheme = Differentiation::Spectral);

} // namespace qlt::packet
