#include "qlt/packet.hpp"

#include "qlt/algebra.hpp"
#include "qlt/errors.hpp"
#include "qlt/identities.hpp"

#include <fftw3.h>

#include <cmath>

namespace qlt::packet {

namespace {

using cvec = std::vector<std::complex<double>>;

bool power_of_two(int n) {
    return n > 0 && (n & (n - 1)) == 0;
}

void fft_inplace(cvec& data, int sign) {
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(data.size()),
                                      reinterpret_cast<fftw_complex*>(data.data()),
                                      reinterpret_cast<fftw_complex*>(data.data()), sign,
                                      FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

cvec derivative(const cvec& psi, const MomentumGrid& grid, Differentiation scheme) {
    const int n = grid.n;
    const double dp = grid.dp();
    cvec out(psi.size());
    if (scheme == Differentiation::FiniteDifference4) {
        for (int j = 0; j < n; ++j) {
            auto at = [&](int k) { return psi[static_cast<std::size_t>((k + n) % n)]; };
            out[static_cast<std::size_t>(j)] =
                (-at(j + 2) + 8.0 * at(j + 1) - 8.0 * at(j - 1) + at(j - 2)) / (12.0 * dp);
        }
        return out;
    }
    out = psi;
    fft_inplace(out, FFTW_FORWARD);
    const double base = 2.0 * M_PI / (n * dp);
    for (int j = 0; j < n; ++j) {
        int k = j <= n / 2 ? j : j - n;
        if (j == n / 2) {
            k = 0; // drop the unmatched Nyquist mode of the derivative
        }
        out[static_cast<std::size_t>(j)] *= std::complex<double>(0.0, base * k);
    }
    fft_inplace(out, FFTW_BACKWARD);
    for (auto& v : out) {
        v /= n;
    }
    return out;
}

bool edge_contained(const cvec& psi, double threshold) {
    double peak = 0.0;
    for (const auto& v : psi) {
        peak = std::max(peak, std::abs(v));
    }
    if (peak == 0.0) {
        return true;
    }
    return std::abs(psi.front()) <= threshold * peak && std::abs(psi.back()) <= threshold * peak;
}

// Scalar coefficient with hbar = c = 1 and m bound to the packet mass.
std::complex<double> scalar_value(const Scalar& s, double mass) {
    std::complex<double> out = 0.0;
    for (const auto& [unit, g] : s.terms()) {
        double weight = std::pow(mass, unit.m);
        out += std::complex<double>(static_cast<double>(g.re), static_cast<double>(g.im)) *
               weight;
    }
    return out;
}

std::complex<double> inner(const cvec& a, const cvec& b, double dp) {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        acc += std::conj(a[j]) * b[j];
    }
    return acc * dp;
}

} // namespace

WavePacket gaussian_packet(double p0, double sigma, double mass, const MomentumGrid& grid) {
    if (!power_of_two(grid.n) || grid.n < 64 || grid.p_max <= 0.0) {
        throw numeric_domain_error("grid must have p_max > 0 and n a power of two >= 64");
    }
    if (sigma <= 0.0) {
        throw numeric_domain_error("packet width must be positive");
    }
    if (p0 - 8.0 * sigma < -grid.p_max || p0 + 8.0 * sigma > grid.p_max) {
        throw numeric_domain_error("grid too small: packet must sit >= 8 sigma from the edges");
    }

    WavePacket pk{grid, cvec(static_cast<std::size_t>(grid.n)), mass};
    const double norm = std::pow(2.0 * M_PI * sigma * sigma, -0.25);
    for (int j = 0; j < grid.n; ++j) {
        double p = grid.point(j);
        double d = p - p0;
        pk.amplitudes[static_cast<std::size_t>(j)] =
            norm * std::exp(-d * d / (4.0 * sigma * sigma));
    }
    double total = std::real(inner(pk.amplitudes, pk.amplitudes, grid.dp()));
    double scale = 1.0 / std::sqrt(total);
    for (auto& v : pk.amplitudes) {
        v *= scale;
    }
    return pk;
}

AppliedState apply_word(const OpWord& word, const WavePacket& pk, double t,
                        Differentiation scheme) {
    const AlgebraSpec& rel = relativistic_algebra();
    AppliedState state{pk.amplitudes, false};
    const auto& factors = word.factors();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        const std::string& name = rel.generator(it->gen).name;
        if (name == "t") {
            double factor = std::pow(t, it->power);
            for (auto& v : state.values) {
                v *= factor;
            }
        } else if (name == "p") {
            for (int j = 0; j < pk.grid.n; ++j) {
                state.values[static_cast<std::size_t>(j)] *=
                    std::pow(pk.grid.point(j), it->power);
            }
        } else if (name == "H") {
            for (int j = 0; j < pk.grid.n; ++j) {
                double p = pk.grid.point(j);
                double energy = std::sqrt(p * p + pk.mass * pk.mass);
                state.values[static_cast<std::size_t>(j)] *= std::pow(energy, it->power);
            }
        } else if (name == "x") {
            if (it->power < 0) {
                throw numeric_domain_error("cannot apply a negative power of x");
            }
            for (int k = 0; k < it->power; ++k) {
                state.values = derivative(state.values, pk.grid, scheme);
                for (auto& v : state.values) {
                    v *= std::complex<double>(0.0, 1.0); // x = i d/dp with hbar = 1
                }
            }
        } else {
            throw numeric_domain_error("packet oracle cannot apply generator '" + name + "'");
        }
        if (!edge_contained(state.values, 1e-9)) {
            state.accuracy_warning = true;
        }
    }
    return state;
}

std::complex<double> expectation(const OpExpr& e, const WavePacket& pk, double t,
                                 Differentiation scheme) {
    std::complex<double> acc = 0.0;
    for (const auto& [word, coeff] : e.terms()) {
        AppliedState applied = apply_word(word, pk, t, scheme);
        acc += scalar_value(coeff, pk.mass) * inner(pk.amplitudes, applied.values, pk.grid.dp());
    }
    return acc;
}

IntervalCheck check_interval_identity(const WavePacket& pk, double t, Differentiation scheme) {
    const BuiltinExpressions& b = builtin_expressions();
    OpExpr lhs_expr = b.tprime5 * b.tprime5 - b.xprime5 * b.xprime5; // c = 1

    const AlgebraSpec& rel = relativistic_algebra();
    OpExpr x_sq = OpExpr::word(OpWord::generator(rel.generator_index("x"), 2));
    OpExpr h_inv_sq = OpExpr::word(OpWord::generator(rel.generator_index("H"), -2));

    IntervalCheck check{};
    check.lhs = expectation(lhs_expr, pk, t, scheme);
    double x2 = std::real(expectation(x_sq, pk, t, scheme));
    double hinv2 = std::real(expectation(h_inv_sq, pk, t, scheme));
    check.rhs = t * t - x2 + hinv2 / 4.0;
    check.residual = std::abs(check.lhs - check.rhs) / std::max(1.0, std::abs(x2));
    return check;
}

EhrenfestReport ehrenfest_check(const WavePacket& pk, Differentiation scheme) {
    const BuiltinExpressions& b = builtin_expressions();
    const AlgebraSpec& rel = relativistic_algebra();

    const double delta = 0.5; // <x'>(t) is exactly linear in t
    double x0 = std::real(expectation(b.xprime5, pk, 0.0, scheme));
    double x1 = std::real(expectation(b.xprime5, pk, delta, scheme));

    OpExpr x_op = OpExpr::word(OpWord::generator(rel.generator_index("x")));
    OpExpr p_op = OpExpr::word(OpWord::generator(rel.generator_index("p")));
    OpExpr h_op = OpExpr::word(OpWord::generator(rel.generator_index("H")));
    OpExpr h_inv = OpExpr::word(OpWord::generator(rel.generator_index("H"), -1));
    OpExpr velocity_bracket = (h_op * x_op - x_op * h_op).scaled(Scalar::imaginary_unit());

    EhrenfestReport r{};
    r.slope_measured = (x1 - x0) / delta;
    r.slope_predicted = -std::real(expectation(p_op, pk, 0.0, scheme)) / pk.mass;
    r.velocity_bracket = std::real(expectation(velocity_bracket, pk, 0.0, scheme));
    r.velocity_shell = std::real(expectation(p_op * h_inv, pk, 0.0, scheme));
    return r;
}

} // namespace qlt::packet
