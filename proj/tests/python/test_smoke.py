from fractions import Fraction

import pytest

import tpw


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


def fr(m):
    return [[Fraction(x) for x in row] for row in m]


def test_sample_realize_factor_round_trip():
    for trial in range(5):
        rec = tpw.sample(3, seed=4, trial=trial)
        assert fr(tpw.realize(rec["cell"])) == fr(rec["matrix"])
        assert tpw.factor_cell(rec["matrix"]) == rec["cell"]


def test_realize_matches_elementary_products():
    # x_1(2) diag(3, 1) y_1(1/2), multiplied out here.
    cell = {"word1": [1], "params1": ["2"], "t": ["3", "1"], "word2": [1], "params2": ["1/2"]}
    x = [[1, 2], [0, 1]]
    t = [[3, 0], [0, 1]]
    y = [[1, 0], [Fraction(1, 2), 1]]
    assert fr(tpw.realize(cell)) == matmul(matmul(x, t), y)


def test_classify():
    assert tpw.classify([[3, 1], [1, 1]])["regular_semisimple"]
    ident = tpw.classify([[1, 0], [0, 1]])
    assert ident["unipotent"] and not ident["regular"]
    assert tpw.classify([["2", "1"], ["0", "2"]])["regular"]


def test_conjecture_reports():
    assert tpw.check_conjecture([[2, 2, 0], [0, 2, 0], [0, 0, 1]])["holds"]
    rep = tpw.check_conjecture([[1, 1, 1, 2], [0, 1, 1, 2], [0, 0, 1, 2], [0, 0, 0, 2]])
    assert rep["part2"] == [True, True, False, True]


def test_suites_are_deterministic_across_workers():
    assert "cells" in tpw.suite_names()
    a = tpw.run_suite("lem-conj", seed=3, trials=12, workers=1)
    b = tpw.run_suite("lem-conj", seed=3, trials=12, workers=3)
    assert a == b and a["pass"]
    assert len(a["records"]) == 12


def test_t_gt1():
    rep = tpw.t_gt1_witness([4, 2, 1])
    assert rep["pass"]
    assert rep["t"] == ["4", "2", "1"]
    assert tpw.t_gt1_witness([Fraction(5, 2), 1])["pass"]


def test_errors():
    with pytest.raises(ValueError):
        tpw.run_suite("no-such-property")
    with pytest.raises(ValueError):
        tpw.t_gt1_witness([1, 2])
    with pytest.raises(TypeError):
        tpw.classify([[1.5, 0], [0, 1]])
