from fractions import Fraction

import pytest

import svol


def test_tree_spheres():
    q = svol.QNumber.q()
    for r in range(1, 6):
        assert svol.ssa_exact("A", 1, r) == (q + svol.QNumber(1)) * svol.QNumber.q_pow(r - 1)
    assert [svol.sv_exact("A", 1, r).evaluate_exact(2) for r in range(4)] == [1, 4, 10, 22]


def test_unit_spheres():
    assert str(svol.ssa_exact("C", 2, 1)) == "2*q^3 + 2*q^2 + 2*q + 2"
    assert svol.ssa_exact("A", 2, 1).evaluate_exact(2) == 14
    assert svol.sv_exact("C", 2, 1, "special") == svol.QNumber(1) + svol.ssa_exact("C", 2, 1) / svol.QNumber(2)


def test_closed_form_matches_exact():
    f = svol.ssa_closed_form("D", 4)
    g = svol.sv_closed_form("D", 4, "special")
    for r in range(1, 7):
        assert f.evaluate(r) == svol.ssa_exact("D", 4, r)
        assert g.evaluate(r) == svol.sv_exact("D", 4, r, "special")
    assert f.is_primary()


def test_b_restrictions_are_primary():
    f = svol.ssa_closed_form("B", 3)
    assert not f.is_primary()
    for j in (0, 1):
        h = f.restrict_parity(j)
        assert h.is_parity_free() and h.is_primary()
        assert h.evaluate(2) == f.evaluate(4 + j)


def test_asymptote():
    p = svol.asymptote("B", 3)
    assert (p["epsilon"], p["pi"]) == (0, Fraction(5))
    p = svol.asymptote("B", 5)
    assert p["pi"] == Fraction(25, 2)
    p = svol.asymptote("D", 4, "special")
    assert p["epsilon"] >= 0


def test_poincare_and_enumeration():
    poly, degree = svol.poincare_parabolic("B", 3, [2])
    assert degree == 8
    assert poly.evaluate_exact(1) == 24
    fast = svol.enumerate_sphere("B", 4, 3)
    assert fast == svol.enumerate_sphere("B", 4, 3, method="brute")
    assert all(isinstance(x, Fraction) for pt in fast for x in pt)


def test_verify_and_errors():
    report = svol.verify("multisum", seed=3, count=20)
    assert report["pass"]
    report = svol.verify("table1", systems=[("C", 3)])
    assert report["systems"][0]["exact_vs_closed"] == "pass"
    assert svol.root_system("D", 4)["highest_root"] == [1, 2, 1, 1]
    with pytest.raises(ValueError):
        svol.ssa_exact("B", 2, 1)
    with pytest.raises(ValueError):
        svol.verify("nothing")
