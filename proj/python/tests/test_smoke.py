import json

import pytest

import symrig


def test_freudenthal_all_algebras():
    for tag in symrig.algebra_tags():
        assert symrig.check_freudenthal(tag, seed=3, samples=5)


def test_dimensions():
    assert [symrig.derivation_algebra_dim(t) for t in ("C", "CxC", "HC")] == [3, 8, 21]
    assert symrig.derivation_algebra_dim("OC", exact=False) == 52
    assert symrig.centralizer_dim("OC") == 2


def test_weights():
    assert symrig.select_module("HC") == ("C3", [0, 1, 0])
    assert symrig.weyl_dim("F4", [0, 0, 0, 1]) == 26
    mult = symrig.weight_multiplicities("A2", [1, 1])
    assert mult[(0, 0)] == 2 and sum(mult.values()) == 8


def test_surfaces_and_degeneration():
    assert len(symrig.orbit_closure_fan()) == 6
    assert symrig.invariant_sublattice(["sigma23"]) == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1]]
    assert symrig.solve_coefficient_system() == [(1, 1, 0, 0, 1, 0), (0, 1, 0, 1, 1, 0)]
    verdict, witness = symrig.theta0_contradiction(0)
    assert verdict == "CONTRADICTION" and "RELATIVE_INTERIOR_OF_FACE(2)" in witness
    assert len(symrig.search_equivariant_models("P2")) == 1
    assert symrig.search_equivariant_models("F3") == []


def test_errors():
    with pytest.raises(ValueError):
        symrig.derivation_algebra_dim("R")
    with pytest.raises(symrig.SymrigError):
        symrig.weyl_dim("A2", [-1, 0])


def test_suite_report():
    a = symrig.run_suite_json("degeneration")
    assert a == symrig.run_suite_json("degeneration")
    report = json.loads(a)
    assert report["suite"] == "degeneration"
    assert all(c["status"] == "pass" for c in report["checks"])
