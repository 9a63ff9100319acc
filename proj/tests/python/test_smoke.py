import os
from fractions import Fraction

import pytest

import ctfpoly

DATA = os.environ.get("CTF_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


@pytest.fixture
def p8():
    return ctfpoly.example_graph()


def test_graph_basics(p8):
    assert p8.vertex_count == 3
    assert p8.edge_count == 5
    assert p8.edges == [(0, 2), (0, 1), (1, 2), (0, 1), (1, 2)]
    assert p8.stats() == {"components": 1, "rank": 2, "nullity": 3}
    assert ctfpoly.Graph.parse(p8.to_text()) == p8
    assert ctfpoly.Graph.load(os.path.join(DATA, "p8.g")) == p8


def test_parse_error():
    with pytest.raises(ctfpoly.ParseError):
        ctfpoly.Graph.parse("v 2\ne 0 7\n")
    with pytest.raises(ValueError):
        ctfpoly.Graph(2, [(0, 3)])


def test_tutte_and_rank_generating(p8):
    t = ctfpoly.tutte(p8)
    assert str(t) == "y^3+x^2+2*x*y+2*y^2+x+y"
    assert t(1, 1) == 8
    assert t(2, 2) == 32
    r = ctfpoly.rank_generating(p8)
    assert r == ctfpoly.counting_polynomial(p8, "kappa_bar_mod")


def test_counts(p8):
    assert ctfpoly.count(p8, "kappa_mod", 3, 3) == 12
    assert ctfpoly.count(p8, "kappa_int", 2, 2) == 8
    assert ctfpoly.count(p8, "kappa_mod", 4, 3, group_p="2,2") == ctfpoly.count(p8, "kappa_mod", 4, 3)
    assert ctfpoly.count(p8, "kappa_bar_local", 0, 0, orientation="01101") == 1
    with pytest.raises(ValueError):
        ctfpoly.count(p8, "kappa_mod", 0, 1)
    with pytest.raises(ctfpoly.BudgetExceeded):
        ctfpoly.count(p8, "kappa_int", 5, 5, budget=10)


def test_rational_coefficients(p8):
    k = ctfpoly.counting_polynomial(p8, "kappa_int")
    assert k.coefficient(0, 3) == Fraction(14, 3)
    assert k.terms()[(2, 0)] == 3
    assert k(Fraction(1, 2), 0) == k(0.5, 0)
    assert k.to_json()["vars"] == ["x", "y"]
    assert (k.degree_x, k.degree_y) == (2, 3)


def test_polynomial_report(p8):
    report = ctfpoly.polynomials(p8)
    assert set(report) >= {"tutte", "rank_generating", "kappa_mod", "kappa_int", "tau_mod", "phi_bar_int"}
    assert report["kappa_mod"](2, 2) == 2


def test_orientations_and_classes(p8):
    assert len(ctfpoly.orientations(p8)) == 32
    assert len(ctfpoly.orientations(p8, "acyclic")) == 6
    ce = ctfpoly.classes(p8, "cut-eulerian")
    assert len(ce) == 8
    assert sum(size for _, size in ce) == 32
    assert len(ctfpoly.classes(p8, "eulerian", "totally-cyclic")) == 4


def test_local_polynomial(p8):
    k = ctfpoly.local_polynomial(p8, "kappa_local", "01101")
    assert k(3, 2) == ctfpoly.count(p8, "kappa_local", 3, 2, orientation="01101")


def test_verify(p8):
    report = ctfpoly.verify(p8)
    assert report["all_passed"]
    assert report["notices"] == ["kappa(2,2) = 2, |O_ce| = 8, #[O_ce] = 2"]
    failed = ctfpoly.verify(p8, fail=["TC"])
    assert not failed["all_passed"]
    assert [e["id"] for e in failed["identities"] if e["status"] == "fail"] == ["TC"]


def test_cli():
    code, out, _ = ctfpoly.run_cli(["example"])
    assert code == 0
    assert "T = y^3+x^2+2*x*y+2*y^2+x+y" in out
    code, _, err = ctfpoly.run_cli(["count", "/missing.g", "--family", "kappa_mod"])
    assert code == 1 and err


def test_families():
    assert len(ctfpoly.families()) == 18
