#include "qlt/algebra.hpp"
#include "qlt/errors.hpp"
#include "qlt/exprlang.hpp"
#include "qlt/fmtutil.hpp"
#include "qlt/identities.hpp"
#include "qlt/kinematics.hpp"
#include "qlt/packet.hpp"
#include "qlt/waveguide.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

// Exit codes: 0 success / all pass; 1 identity or check failure;
// 2 parse or flag error; 3 numeric precondition violation.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

int run_normalize(const std::string& algebra, const std::string& text) {
    const qlt::AlgebraSpec& spec = qlt::algebra_by_name(algebra);
    qlt::OpExpr e = qlt::parse(text, spec);
    std::cout << qlt::render(qlt::normalize(e, spec), spec) << "\n";
    return kExitPass;
}

void print_report(const qlt::VerificationReport& r) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name
              << "  steps=" << r.rule_applications;
    if (!r.pass) {
        std::cout << "  residual=" << r.residual;
    }
    std::cout << "\n";
}

int run_verify(const std::string& name, bool all, const std::string& algebra) {
    std::vector<qlt::VerificationReport> reports;
    if (all) {
        reports = qlt::verify_all(algebra);
    } else {
        bool known = false;
        for (const auto& id : qlt::identity_registry()) {
            known = known || id.name == name;
        }
        if (!known) {
            std::cerr << "error: unknown identity '" << name << "'\n";
            return kExitUsage;
        }
        reports.push_back(qlt::verify_identity(name));
    }
    bool ok = true;
    for (const auto& r : reports) {
        print_report(r);
        ok = ok && r.pass;
    }
    return ok ? kExitPass : kExitFail;
}

int run_verify_expr(const std::string& algebra, const std::string& lhs,
                    const std::string& rhs) {
    const qlt::AlgebraSpec& spec = qlt::algebra_by_name(algebra);
    qlt::OpExpr diff = qlt::parse(lhs, spec) - qlt::parse(rhs, spec);
    qlt::NormalizeResult res = qlt::normalize_counted(diff, spec);
    if (res.expr.is_zero()) {
        std::cout << "PASS  steps=" << res.steps << "\n";
        return kExitPass;
    }
    std::cout << "FAIL  steps=" << res.steps << "  residual=" << qlt::render(res.expr, spec)
              << "\n";
    return kExitFail;
}

int run_particle(double mass, bool natural, double t, double x, const std::string& action) {
    auto k = natural ? qlt::kinematics::Constants::natural()
                     : qlt::kinematics::Constants::si();
    if (action == "window") {
        std::cout << "window=" << qlt::fp(qlt::kinematics::spacelike_window(mass, k)) << "\n";
        return kExitPass;
    }
    auto r = qlt::kinematics::tunnel_probability({t, x}, mass, k);
    std::cout << "classification=" << qlt::kinematics::to_string(r.classification) << "\n";
    if (r.s) {
        std::cout << "s=" << qlt::fp(*r.s) << "\n";
        std::cout << "amplitude=" << qlt::fp(*r.amplitude) << "\n";
        std::cout << "probability=" << qlt::fp(*r.probability) << "\n";
    }
    return kExitPass;
}

int run_waveguide(double cutoff_ghz, double width_mm, double freq_ghz, double t,
                  const std::string& scan_spec, const std::string& csv_path) {
    auto k = qlt::kinematics::Constants::si();
    qlt::waveguide::WaveguideParams w =
        width_mm > 0.0 ? qlt::waveguide::WaveguideParams::from_width(width_mm * 1e-3, k)
                       : qlt::waveguide::WaveguideParams::from_cutoff(cutoff_ghz * 1e9 * 2.0 *
                                                                      M_PI);
    auto eff = qlt::waveguide::effective_quantities(w, k);
    std::cout << "omega_c=" << qlt::fp(w.omega_c) << "\n";
    std::cout << "m_eff=" << qlt::fp(eff.m_eff) << "\n";
    std::cout << "lambda_c=" << qlt::fp(eff.lambda_c) << "\n";
    std::cout << "window=" << qlt::fp(eff.lambda_c / 2.0) << "\n";

    if (freq_ghz > 0.0) {
        auto s = qlt::waveguide::dispersion_from_omega(freq_ghz * 1e9 * 2.0 * M_PI, w, k);
        std::cout << "omega=" << qlt::fp(s.omega) << "\n";
        if (s.k_x) {
            std::cout << "k_x=" << qlt::fp(*s.k_x) << "\n";
            std::cout << "v_g=" << qlt::fp(*s.group_velocity) << "\n";
        } else {
            std::cout << "kappa=" << qlt::fp(*s.kappa) << "\n";
        }
    }

    if (!scan_spec.empty()) {
        double x0 = 0.0, x1 = 0.0, step = 0.0;
        if (std::sscanf(scan_spec.c_str(), "%lf:%lf:%lf", &x0, &x1, &step) != 3) {
            std::cerr << "error: --scan expects x0:x1:step\n";
            return kExitUsage;
        }
        auto rows = qlt::waveguide::scan(w, k, t, x0, x1, step);
        std::string csv = qlt::waveguide::scan_csv(rows);
        if (!csv_path.empty()) {
            std::ofstream out(csv_path, std::ios::binary);
            out << csv;
            std::cout << "rows=" << rows.size() << "\n";
        } else {
            std::cout << csv;
        }
    }
    return kExitPass;
}

int run_packet(int n, double pmax, double p0, double sigma, double mass, double t,
               const std::string& action, bool fd) {
    auto scheme = fd ? qlt::packet::Differentiation::FiniteDifference4
                     : qlt::packet::Differentiation::Spectral;
    auto pk = qlt::packet::gaussian_packet(p0, sigma, mass, {pmax, n});
    if (action == "check-eq9") {
        auto check = qlt::packet::check_interval_identity(pk, t, scheme);
        double tol = fd ? 1e-4 : 1e-6;
        std::cout << "lhs=" << qlt::fp(check.lhs.real()) << "\n";
        std::cout << "rhs=" << qlt::fp(check.rhs) << "\n";
        std::cout << "residual=" << qlt::fp(check.residual) << "\n";
        std::cout << "tolerance=" << qlt::fp(tol) << "\n";
        bool ok = check.residual < tol;
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? kExitPass : kExitFail;
    }
    auto r = qlt::packet::ehrenfest_check(pk, scheme);
    std::cout << "slope_measured=" << qlt::fp(r.slope_measured) << "\n";
    std::cout << "slope_predicted=" << qlt::fp(r.slope_predicted) << "\n";
    std::cout << "velocity_bracket=" << qlt::fp(r.velocity_bracket) << "\n";
    std::cout << "velocity_shell=" << qlt::fp(r.velocity_shell) << "\n";
    bool ok = std::abs(r.slope_measured - r.slope_predicted) < 1e-8 &&
              std::abs(r.velocity_bracket - r.velocity_shell) < 1e-8;
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum Lorentz transformation identity checker and evanescent-mode "
                 "calculator"};
    app.require_subcommand(1);

    std::string algebra = "rel";
    std::string expr_text, lhs_text, rhs_text, identity_name, verify_algebra;
    bool verify_all_flag = false;

    auto* normalize_cmd = app.add_subcommand("normalize", "canonicalize an expression");
    normalize_cmd->add_option("--algebra", algebra)->check(CLI::IsMember({"rel", "nonrel"}));
    normalize_cmd->add_option("expr", expr_text)->required();

    auto* verify_cmd = app.add_subcommand("verify", "verify registered identities");
    verify_cmd->add_option("name", identity_name);
    verify_cmd->add_flag("--all", verify_all_flag);
    verify_cmd->add_option("--algebra", verify_algebra)
        ->check(CLI::IsMember({"rel", "nonrel"}));

    auto* vexpr_cmd = app.add_subcommand("verify-expr", "check lhs == rhs after rewriting");
    std::string vexpr_algebra = "rel";
    vexpr_cmd->add_option("--algebra", vexpr_algebra)->check(CLI::IsMember({"rel", "nonrel"}));
    vexpr_cmd->add_option("lhs", lhs_text)->required();
    vexpr_cmd->add_option("rhs", rhs_text)->required();

    auto* particle_cmd = app.add_subcommand("particle", "spacelike window and tunneling");
    double mass = 0.0, pt = 0.0, px = 0.0;
    bool natural = false;
    std::string particle_action = "window";
    particle_cmd->add_option("--mass", mass)->required();
    particle_cmd->add_flag("--natural", natural, "use hbar = c = 1 instead of SI");
    particle_cmd->add_option("--t", pt);
    particle_cmd->add_option("--x", px);
    particle_cmd->add_option("action", particle_action)
        ->check(CLI::IsMember({"window", "prob"}));

    auto* guide_cmd = app.add_subcommand("waveguide", "evanescent-mode numerics");
    double cutoff_ghz = 0.0, width_mm = 0.0, freq_ghz = 0.0, gt = 0.0;
    std::string scan_spec, csv_path;
    auto* cutoff_opt = guide_cmd->add_option("--cutoff-ghz", cutoff_ghz);
    auto* width_opt = guide_cmd->add_option("--width-mm", width_mm);
    cutoff_opt->excludes(width_opt);
    guide_cmd->add_option("--freq-ghz", freq_ghz);
    guide_cmd->add_option("--t", gt);
    guide_cmd->add_option("--scan", scan_spec, "x0:x1:step in meters");
    guide_cmd->add_option("--csv", csv_path);

    auto* packet_cmd = app.add_subcommand("packet", "wave-packet oracle");
    int n = 4096;
    double pmax = 20.0, p0 = 1.0, sigma = 0.5, pkmass = 1.0, pkt = 0.0;
    bool fd = false;
    std::string packet_action;
    packet_cmd->add_option("--n", n);
    packet_cmd->add_option("--pmax", pmax);
    packet_cmd->add_option("--p0", p0);
    packet_cmd->add_option("--sigma", sigma);
    packet_cmd->add_option("--mass", pkmass);
    packet_cmd->add_option("--t", pkt);
    packet_cmd->add_flag("--fd", fd, "4th-order finite differences instead of spectral");
    packet_cmd->add_option("action", packet_action)
        ->required()
        ->check(CLI::IsMember({"check-eq9", "ehrenfest"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            return app.exit(e);
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (normalize_cmd->parsed()) {
            return run_normalize(algebra, expr_text);
        }
        if (verify_cmd->parsed()) {
            if (!verify_all_flag && identity_name.empty()) {
                std::cerr << "error: verify needs an identity name or --all\n";
                return kExitUsage;
            }
            return run_verify(identity_name, verify_all_flag, verify_algebra);
        }
        if (vexpr_cmd->parsed()) {
            return run_verify_expr(vexpr_algebra, lhs_text, rhs_text);
        }
        if (particle_cmd->parsed()) {
            return run_particle(mass, natural, pt, px, particle_action);
        }
        if (guide_cmd->parsed()) {
            if (cutoff_ghz <= 0.0 && width_mm <= 0.0) {
                std::cerr << "error: waveguide needs --cutoff-ghz or --width-mm\n";
                return kExitUsage;
            }
            return run_waveguide(cutoff_ghz, width_mm, freq_ghz, gt, scan_spec, csv_path);
        }
        if (packet_cmd->parsed()) {
            return run_packet(n, pmax, p0, sigma, pkmass, pkt, packet_action, fd);
        }
    } catch (const qlt::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qlt::numeric_domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
