#include "qlt/waveguide.hpp"

#include "qlt/errors.hpp"
#include "qlt/fmtutil.hpp"

#include <cmath>

namespace qlt::waveguide {

WaveguideParams WaveguideParams::from_cutoff(double omega_c) {
    if (omega_c <= 0.0) {
        throw numeric_domain_error("cutoff frequency must be positive");
    }
    return {omega_c, std::nullopt};
}

WaveguideParams WaveguideParams::from_width(double a, const Constants& k) {
    if (a <= 0.0) {
        throw numeric_domain_error("waveguide width must be positive");
    }
    return {M_PI * k.c / a, a};
}

EffectiveQuantities effective_quantities(const WaveguideParams& w, const Constants& k) {
    double m_eff = k.hbar * w.omega_c / (k.c * k.c);
    return {m_eff, k.hbar / (m_eff * k.c)};
}

GuidedPhotonState dispersion_from_omega(double omega, const WaveguideParams& w,
                                        const Constants& k) {
    if (omega <= 0.0) {
        throw numeric_domain_error("frequency must be positive");
    }
    GuidedPhotonState s;
    s.omega = omega;
    if (omega >= w.omega_c) {
        double k_x = std::sqrt(omega * omega - w.omega_c * w.omega_c) / k.c;
        s.k_x = k_x;
        s.group_velocity = k.c * k.c * k_x / omega;
    } else {
        s.kappa = std::sqrt(w.omega_c * w.omega_c - omega * omega) / k.c;
    }
    return s;
}

GuidedPhotonState dispersion_from_kx(double k_x, const WaveguideParams& w, const Constants& k) {
    if (k_x < 0.0) {
        throw numeric_domain_error("wavenumber must be nonnegative");
    }
    GuidedPhotonState s;
    s.omega = std::sqrt(k_x * k_x * k.c * k.c + w.omega_c * w.omega_c);
    s.k_x = k_x;
    s.group_velocity = k.c * k.c * k_x / s.omega;
    return s;
}

kinematics::TunnelResult guided_tunnel_probability(const Event& e, const WaveguideParams& w,
                                                   const Constants& k) {
    double m_eff = k.hbar * w.omega_c / (k.c * k.c);
    return kinematics::tunnel_probability(e, m_eff, k);
}

std::vector<ScanRow> scan(const WaveguideParams& w, const Constants& k, double t, double x0,
                          double x1, double step) {
    if (step <= 0.0) {
        throw numeric_domain_error("scan step must be positive");
    }
    std::vector<ScanRow> rows;
    if (x1 < x0) {
        return rows;
    }
    auto count = static_cast<std::size_t>(std::floor((x1 - x0) / step + 1e-9)) + 1;
    rows.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        double x = x0 + static_cast<double>(i) * step;
        auto result = guided_tunnel_probability({t, x}, w, k);
        rows.push_back({x, k.c * k.c * t * t - x * x, result.s, result.classification,
                        result.probability});
    }
    return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::string out = "x,interval,s,classification,probability\n";
    for (const auto& r : rows) {
        out += fp(r.x);
        out += ',';
        out += fp(r.interval);
        out += ',';
        if (r.s) {
            out += fp(*r.s);
        }
        out += ',';
        out += kinematics::to_string(r.classification);
        out += ',';
        if (r.probability) {
            out += fp(*r.probability);
        }
        out += '\n';
    }
    return out;
}

} // namespace qlt::waveguide
