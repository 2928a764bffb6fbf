#include "qlt/algebra.hpp"
#include "qlt/exprlang.hpp"
#include "qlt/identities.hpp"
#include "qlt/kinematics.hpp"
#include "qlt/packet.hpp"
#include "qlt/waveguide.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

qlt::kinematics::Constants constants(bool natural) {
    return natural ? qlt::kinematics::Constants::natural()
                   : qlt::kinematics::Constants::si();
}

py::dict report_dict(const qlt::VerificationReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["pass"] = r.pass;
    d["residual"] = r.residual;
    d["rule_applications"] = r.rule_applications;
    return d;
}

py::dict tunnel_dict(const qlt::kinematics::TunnelResult& r) {
    py::dict d;
    d["classification"] = qlt::kinematics::to_string(r.classification);
    if (r.s) {
        d["s"] = *r.s;
        d["amplitude"] = *r.amplitude;
        d["probability"] = *r.probability;
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_qlt, m) {
    m.doc() = "quantum Lorentz transformation identity checker and evanescent-mode numerics";

    m.def(
        "normalize",
        [](const std::string& expr, const std::string& algebra) {
            const auto& spec = qlt::algebra_by_name(algebra);
            return qlt::render(qlt::normalize(qlt::parse(expr, spec), spec), spec);
        },
        py::arg("expr"), py::arg("algebra") = "rel",
        "Canonical form of an operator expression, rendered as text.");

    m.def(
        "equals",
        [](const std::string& lhs, const std::string& rhs, const std::string& algebra) {
            const auto& spec = qlt::algebra_by_name(algebra);
            return qlt::equals(qlt::parse(lhs, spec), qlt::parse(rhs, spec), spec);
        },
        py::arg("lhs"), py::arg("rhs"), py::arg("algebra") = "rel");

    m.def(
        "verify", [](const std::string& name) { return report_dict(qlt::verify_identity(name)); },
        py::arg("name"));

    m.def(
        "verify_all",
        [](const std::string& algebra) {
            py::list out;
            for (const auto& r : qlt::verify_all(algebra)) {
                out.append(report_dict(r));
            }
            return out;
        },
        py::arg("algebra") = "");

    m.def(
        "spacelike_window",
        [](double mass, bool natural) {
            return qlt::kinematics::spacelike_window(mass, constants(natural));
        },
        py::arg("mass"), py::arg("natural") = false);

    m.def(
        "tunnel_probability",
        [](double t, double x, double mass, bool natural) {
            return tunnel_dict(
                qlt::kinematics::tunnel_probability({t, x}, mass, constants(natural)));
        },
        py::arg("t"), py::arg("x"), py::arg("mass"), py::arg("natural") = false);

    m.def(
        "boost_classical",
        [](double t, double x, double v, bool natural) {
            auto e = qlt::kinematics::boost_classical({t, x}, v, constants(natural));
            return py::make_tuple(e.t, e.x);
        },
        py::arg("t"), py::arg("x"), py::arg("v"), py::arg("natural") = false);

    m.def(
        "waveguide_effective",
        [](double omega_c) {
            auto k = qlt::kinematics::Constants::si();
            auto eff = qlt::waveguide::effective_quantities(
                qlt::waveguide::WaveguideParams::from_cutoff(omega_c), k);
            py::dict d;
            d["m_eff"] = eff.m_eff;
            d["lambda_c"] = eff.lambda_c;
            return d;
        },
        py::arg("omega_c"));

    m.def(
        "waveguide_scan_csv",
        [](double omega_c, double t, double x0, double x1, double step) {
            auto k = qlt::kinematics::Constants::si();
            auto w = qlt::waveguide::WaveguideParams::from_cutoff(omega_c);
            return qlt::waveguide::scan_csv(qlt::waveguide::scan(w, k, t, x0, x1, step));
        },
        py::arg("omega_c"), py::arg("t"), py::arg("x0"), py::arg("x1"), py::arg("step"));

    m.def(
        "packet_check_eq9",
        [](int n, double pmax, double p0, double sigma, double mass, double t, bool fd) {
            auto pk = qlt::packet::gaussian_packet(p0, sigma, mass, {pmax, n});
            auto check = qlt::packet::check_interval_identity(
                pk, t,
                fd ? qlt::packet::Differentiation::FiniteDifference4
                   : qlt::packet::Differentiation::Spectral);
            py::dict d;
            d["residual"] = check.residual;
            d["lhs"] = check.lhs.real();
            d["rhs"] = check.rhs;
            return d;
        },
        py::arg("n") = 4096, py::arg("pmax") = 20.0, py::arg("p0") = 1.0,
        py::arg("sigma") = 0.5, py::arg("mass") = 1.0, py::arg("t") = 0.3,
        py::arg("fd") = false);

    m.def(
        "packet_ehrenfest",
        [](int n, double pmax, double p0, double sigma, double mass) {
            auto pk = qlt::packet::gaussian_packet(p0, sigma, mass, {pmax, n});
            auto r = qlt::packet::ehrenfest_check(pk);
            py::dict d;
            d["slope_measured"] = r.slope_measured;
            d["slope_predicted"] = r.slope_predicted;
            d["velocity_bracket"] = r.velocity_bracket;
            d["velocity_shell"] = r.velocity_shell;
            return d;
        },
        py::arg("n") = 4096, py::arg("pmax") = 20.0, py::arg("p0") = 1.0,
        py::arg("sigma") = 0.5, py::arg("mass") = 1.0);
}
