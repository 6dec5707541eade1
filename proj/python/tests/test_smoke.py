from fractions import Fraction

import pytest

import rbdesign


def test_catalog_values():
    names = rbdesign.catalog_names()
    assert {"gamma-rc-8", "theta-8", "delta-rc-8"} <= set(names)
    assert rbdesign.a_value(rbdesign.catalog_design("theta-8")) == Fraction(7007, 8196)
    assert round(float(rbdesign.a_value(rbdesign.gamma(5))), 7) == 0.8382815


def test_spectrum_and_float_oracle():
    d = rbdesign.gamma(6)
    assert rbdesign.efficiency_factors(d) == [
        (Fraction(1), 10),
        (Fraction(8, 9), 9),
        (Fraction(3, 4), 16),
    ]
    assert rbdesign.a_value_float(d) == pytest.approx(float(rbdesign.a_value(d)), rel=1e-9)


def test_design_round_trip():
    d = rbdesign.delta(4, "RC")
    again = rbdesign.read_design(d.text())
    assert again == d
    assert again.is_valid()
    assert len(d.replicates) == 4 and sorted(x for b in d.replicates[0] for x in b) == list(range(1, 37))


def test_errors():
    with pytest.raises(rbdesign.ParseError):
        rbdesign.read_design("1 2 x\n")
    with pytest.raises(rbdesign.DisconnectedError):
        rbdesign.a_value(rbdesign.gamma(1))
    with pytest.raises(rbdesign.ShapeError):
        rbdesign.gamma(9, "RC")


def test_isomorphism_and_sylvester():
    assert rbdesign.are_isomorphic(rbdesign.gamma(2, "R"), rbdesign.gamma(2, "C"))
    assert not rbdesign.are_isomorphic(rbdesign.gamma(3, "R"), rbdesign.gamma(3, "C"))
    assert rbdesign.automorphism_order(rbdesign.catalog_design("delta-rc-8")) == 144
    assert rbdesign.is_sylvester_design(rbdesign.catalog_design("theta-8"))
    assert all(rbdesign.sylvester_checks().values())


def test_robustness():
    rep = rbdesign.robustness(rbdesign.catalog_design("gamma-rc-5"))
    assert round(float(rep["average"]), 4) == 0.8364
    assert round(float(rep["worst"]), 4) == 0.8341


def test_search_small():
    res = rbdesign.search(r=3, restarts=2, seed=7)
    again = rbdesign.search(r=3, restarts=2, seed=7)
    assert res["design"] == again["design"]
    assert res["design"].is_valid()
    assert res["a"] == rbdesign.a_value(res["design"])
