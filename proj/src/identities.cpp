#include "qlt/identities.hpp"

#include "qlt/errors.hpp"
#include "qlt/exprlang.hpp"

namespace qlt {

namespace {

Scalar rat(long num, long den = 1) {
    return Scalar::from_rational(Rational(num, den));
}

BuiltinExpressions make_builtins() {
    const AlgebraSpec& rel = relativistic_algebra();
    const AlgebraSpec& nonrel = nonrelativistic_algebra();
    BuiltinExpressions b;
    b.xprime3 = parse("(H*x + x*H - c^2*(p*t + t*p)) / (2*m*c^2)", rel);
    b.tprime3 = parse("((H*t + t*H) - (p*x + x*p)) / (2*m*c^2)", rel);
    b.xprime5 = parse("(H*x + x*H)/(2*m*c^2) - t*p/m", rel);
    b.tprime5 = parse("t*H/(m*c^2) - (p*x + x*p)/(2*m*c^2)", rel);
    b.tnon = parse("m*(p^-1*x + x*p^-1)/2", nonrel);
    b.hnon_inv = parse("2*m*p^-2", nonrel);
    return b;
}

Identity textual(std::string name, const AlgebraSpec& spec, const std::string& lhs,
                 const std::string& rhs, std::string description) {
    return {std::move(name), spec.name(), parse(lhs, spec), parse(rhs, spec),
            std::move(description)};
}

std::vector<Identity> make_registry() {
    const AlgebraSpec& rel = relativistic_algebra();
    const AlgebraSpec& nonrel = nonrelativistic_algebra();
    const BuiltinExpressions& b = builtin_expressions();

    std::vector<Identity> reg;

    reg.push_back(textual("eq4", rel, "comm(H,t)", "0",
                          "the Hamiltonian commutes with the time parameter"));
    reg.push_back(textual("eq6", rel, "comm(H^2,x)", "2*H*comm(H,x)",
                          "[H^2, x] factors as 2*H*[H, x]"));
    reg.push_back(textual("eq7", rel, "comm(H^2,x)", "-2*i*hbar*c^2*p",
                          "[H^2, x] evaluated through the mass shell"));
    reg.push_back(textual("eq8", rel, "comm(H,x)", "-i*hbar*H^-1*p*c^2",
                          "[H, x] in closed form"));
    reg.push_back(textual("velocity", rel, "(i/hbar)*comm(H,x)", "c^2*p*H^-1",
                          "velocity operator (i/hbar)*[H, x]"));

    {
        OpExpr lhs = (b.tprime5 * b.tprime5).scaled(Scalar::c(2)) - b.xprime5 * b.xprime5;
        OpExpr rhs = parse("c^2*t^2 - x^2 + hbar^2*c^2*H^-2/4", rel);
        reg.push_back({"eq9", "rel", std::move(lhs), std::move(rhs),
                       "boosted interval acquires the hbar^2*c^2*H^-2/4 correction"});
    }

    reg.push_back(textual(
        "a2", rel,
        "(-t*H*(p*x + x*p) - (p*x + x*p)*t*H + (H*x + x*H)*t*p + t*p*(H*x + x*H))"
        " / (2*m^2*c^2)",
        "0", "cross terms of the squared interval cancel"));
    reg.push_back(textual("a5", rel, "(2*x*p - i*hbar)*(2*x*p - i*hbar)",
                          "4*x^2*p^2 - 8*i*hbar*x*p - hbar^2",
                          "square of the reordered momentum term"));
    reg.push_back(textual("a6", rel,
                          "(2*x*H - i*hbar*H^-1*p*c^2)*(2*x*H - i*hbar*H^-1*p*c^2)",
                          "4*x^2*H^2 - 8*i*hbar*x*p*c^2 - 2*hbar^2*c^2 + hbar^2*H^-2*p^2*c^4",
                          "square of the reordered Hamiltonian term"));
    reg.push_back(textual(
        "a7", rel,
        "(2*x*p - i*hbar)*(2*x*p - i*hbar)/(4*m^2*c^2)"
        " - (2*x*H - i*hbar*H^-1*p*c^2)*(2*x*H - i*hbar*H^-1*p*c^2)/(4*m^2*c^4)",
        "-x^2 + hbar^2*c^2*H^-2/4", "combined squares collapse to the interval correction"));
    reg.push_back(textual("b2", rel,
                          "((H*x + x*H)*H - H*(H*x + x*H))"
                          " + c^2*(p*(p*x + x*p) - (p*x + x*p)*p)",
                          "0", "the t-linear part of the coordinate commutator vanishes"));

    {
        OpExpr lhs = (b.xprime5 * b.tprime5 - b.tprime5 * b.xprime5)
                         .scaled(rat(4) * Scalar::mass(2) * Scalar::c(4));
        OpExpr rhs = parse("-2*m^2*c^4*i*hbar*(x*H^-1 + H^-1*x)", rel);
        reg.push_back({"b3", "rel", std::move(lhs), std::move(rhs),
                       "scaled coordinate commutator expansion"});
    }
    {
        OpExpr lhs = b.xprime5 * b.tprime5 - b.tprime5 * b.xprime5;
        OpExpr rhs = parse("-i*hbar*(H^-1*x + x*H^-1)/2", rel);
        reg.push_back({"eq18", "rel", std::move(lhs), std::move(rhs),
                       "boosted coordinates do not commute"});
    }
    {
        OpExpr x = parse("x", nonrel);
        OpExpr lhs = x * b.tnon - b.tnon * x;
        OpExpr rhs = (b.hnon_inv * x + x * b.hnon_inv)
                         .scaled(Scalar::imaginary_unit() * Scalar::hbar() * rat(-1, 4));
        reg.push_back({"eq19", "nonrel", std::move(lhs), std::move(rhs),
                       "position / time-of-arrival uncertainty relation"});
    }
    return reg;
}

} // namespace

const BuiltinExpressions& builtin_expressions() {
    static const BuiltinExpressions b = make_builtins();
    return b;
}

const std::vector<Identity>& identity_registry() {
    static const std::vector<Identity> reg = make_registry();
    return reg;
}

VerificationReport verify_identity(const Identity& id) {
    const AlgebraSpec& spec = algebra_by_name(id.algebra);
    NormalizeResult res = normalize_counted(id.lhs - id.rhs, spec);
    VerificationReport report;
    report.name = id.name;
    report.pass = res.expr.is_zero();
    report.residual = render(res.expr, spec);
    report.rule_applications = res.steps;
    return report;
}

VerificationReport verify_identity(const std::string& name) {
    for (const Identity& id : identity_registry()) {
        if (id.name == name) {
            return verify_identity(id);
        }
    }
    throw numeric_domain_error("unknown identity '" + name + "'");
}

std::vector<VerificationReport> verify_all(const std::string& algebra_filter) {
    std::vector<VerificationReport> reports;
    for (const Identity& id : identity_registry()) {
        if (!algebra_filter.empty() && id.algebra != algebra_filter) {
            continue;
        }
        reports.push_back(verify_identity(id));
    }
    return reports;
}

} // namespace qlt
