import json
from fractions import Fraction

import pytest

import gammalat


def test_known_shifts():
    assert len(gammalat.KNOWN_SHIFTS) == 7
    assert Fraction(1, 2) in gammalat.KNOWN_SHIFTS


def test_coefficients():
    assert [gammalat.coefficient("plain", 2, ell, 3) for ell in range(3)] == [2, 6, 2]
    assert gammalat.coefficient("plus", 2, 2, 3, Fraction(1, 4)) == Fraction(45, 64)
    assert gammalat.coefficient("minus", 1, 0, 1, "1/2") == -4


def test_system_det_inverse():
    sys = gammalat.build_system("plain", [1, 2], 2)
    assert sys["matrix"] == [[0, 1], [2, 1]]
    assert gammalat.det(sys["matrix"]) == -2
    assert gammalat.inverse(sys["matrix"]) == [[Fraction(-1, 2), Fraction(1, 2)], [1, 0]]
    with pytest.raises(gammalat.GammalatError, match="Singular"):
        gammalat.inverse([[1, 2], [2, 4]])


def test_certificate():
    cert = gammalat.cauchy_binet([0, 2, 5], "plain")
    assert cert["all_positive"]
    assert cert["total"] == gammalat.det(gammalat.structured_matrix([0, 2, 5], "plain"))
    assert sum(a * b for _, a, b in cert["terms"]) == cert["total"]


def test_symmetric_table():
    table = gammalat.symmetric_table("minus", "homogeneous", 2, 2, kappa="1/2")
    assert table[2][1] == Fraction(8, 3)
    assert table[2][2] == Fraction(52, 9)


def test_numerics():
    gamma_prime = gammalat.gamma_derivatives("1", 1, digits=30)[1]
    assert gamma_prime.startswith("-5.77215664901532860606512090")
    report = gammalat.verify_identity("minus", 2, 3, kappa="1/3")
    assert report["pass"] and report["rel_residual"] < 1e-40
    basis = gammalat.recover_basis("plus", [0, 1], 1, kappa="1/2", digits=40)
    assert basis[0].startswith("1.77245385090551602729816748334")


def test_density():
    assert gammalat.density_bound("bivariate", 10, 10)["value"] == Fraction(1, 2)
    assert gammalat.density_bound("prior", 25)["value"] == Fraction(1, 10)
    assert not gammalat.density_bound("prior", 7)["exact"]


def test_cli_bridge():
    status, out, _ = gammalat.run_cli(["density", "--variant", "bivariate-shifted", "--N", "4", "--M", "2",
                                       "--with-oracle", "--format", "json"])
    assert status == 0
    rows = json.loads(out)["rows"]
    assert rows[0]["value"] == rows[0]["oracle"] == "1/4"
    assert gammalat.run_cli(["verify", "--family", "plain", "--digits", "10"])[0] == 2
