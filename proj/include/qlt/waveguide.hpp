#pragma once

#include "qlt/kinematics.hpp"

#include <optional>
#include <vector>

namespace qlt::waveguide {

using kinematics::Constants;
using kinematics::Event;

struct WaveguideParams {
    double omega_c = 0.0;            // angular cutoff frequency, rad/s
    std::optional<double> width;     // guide width, if the cutoff came from one

    static WaveguideParams from_cutoff(double omega_c);
    // Lowest rectangular-guide mode: omega_c = pi*c/a.
    static WaveguideParams from_width(double a, const Constants& k);
};

struct EffectiveQuantities {
    double m_eff;    // hbar * omega_c / c^2
    double lambda_c; // hbar / (m_eff * c) = c / omega_c
};

EffectiveQuantities effective_quantities(const WaveguideParams& w, const Constants& k);

// Guided-mode dispersion: omega^2 = k_x^2 c^2 + omega_c^2 above cutoff;
// below cutoff the mode is evanescent with decay constant kappa.
struct GuidedPhotonState {
    double omega = 0.0;
    std::optional<double> k_x;            // real wavenumber, omega >= omega_c
    std::optional<double> kappa;          // decay constant, omega < omega_c
    std::optional<double> group_velocity; // c^2 k_x / omega, propagating only
};

GuidedPhotonState dispersion_from_omega(double omega, const WaveguideParams& w,
                                        const Constants& k);
GuidedPhotonState dispersion_from_kx(double k_x, const WaveguideParams& w, const Constants& k);

// Delegates to kinematics::tunnel_probability with m = m_eff, so the two
// code paths agree bit-for-bit.
kinematics::TunnelResult guided_tunnel_probability(const Event& e, const WaveguideParams& w,
                                                   const Constants& k);

struct ScanRow {
    double x;
    double interval; // c^2 t^2 - x^2
    std::optional<double> s;
    kinematics::Classification classification;
    std::optional<double> probability;
};

// Probability scan at fixed t over x in [x0, x1] with the given step.
std::vector<ScanRow> scan(const WaveguideParams& w, const Constants& k, double t, double x0,
                          double x1, double step);

// CSV with header "x,interval,s,classification,probability"; blank cells for
// absent s/probability; full-precision floats.
std::string scan_csv(const std::vector<ScanRow>& rows);

} // namespace qlt::waveguide
