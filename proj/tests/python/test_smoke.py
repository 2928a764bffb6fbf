import math

import qlt


def test_normalize():
    assert qlt.normalize("comm(H,x)", "rel") == "-i*hbar*c^2*p*H^-1"
    assert qlt.normalize("p*x") == "x*p - i*hbar"
    assert qlt.normalize("x*p^-1 - p^-1*x", "nonrel") == "-i*hbar*p^-2"


def test_equals():
    assert qlt.equals("comm(H,t)", "0")
    assert not qlt.equals("x*p", "p*x")


def test_verify_all():
    reports = qlt.verify_all()
    assert len(reports) == 14
    assert all(r["pass"] for r in reports)
    assert {r["name"] for r in reports} >= {"eq4", "eq9", "eq18", "eq19"}


def test_kinematics():
    assert qlt.spacelike_window(1.0, natural=True) == 0.5
    r = qlt.tunnel_probability(0.0, 0.5, 1.0, natural=True)
    assert r["classification"] == "spacelike-allowed"
    assert abs(r["probability"] - math.exp(-1.0)) < 1e-12
    t, x = qlt.boost_classical(0.0, 1.0, 0.6, natural=True)
    assert abs(t + 0.75) < 1e-14 and abs(x - 1.25) < 1e-14


def test_waveguide():
    eff = qlt.waveguide_effective(4.1213e10)
    assert abs(eff["lambda_c"] - 2.99792458e8 / 4.1213e10) < 1e-15
    csv = qlt.waveguide_scan_csv(4.1213e10, 0.0, 0.0, 0.00728, 0.000728)
    lines = csv.strip().split("\n")
    assert lines[0] == "x,interval,s,classification,probability"
    assert len(lines) == 12


def test_packet_oracle():
    check = qlt.packet_check_eq9(n=1024)
    assert check["residual"] < 1e-6
    r = qlt.packet_ehrenfest(n=1024)
    assert abs(r["slope_measured"] - r["slope_predicted"]) < 1e-8
