"""Exact computations in the totally nonnegative monoid of GL_n.

Matrices are lists of rows whose entries are exact rational strings such as
"3" or "-7/2"; integers and fractions.Fraction values are accepted on input.
"""

import json
from fractions import Fraction

from . import _tpw
from ._tpw import TpwError, suite_names

__all__ = [
    "TpwError",
    "check_conjecture",
    "classify",
    "factor_cell",
    "realize",
    "run_suite",
    "sample",
    "suite_names",
    "t_gt1_witness",
    "to_fraction",
]


def _entry(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (int, str)):
        return str(x)
    raise TypeError(f"matrix entries must be int, str or Fraction, not {type(x).__name__}")


def _matrix_text(m):
    return json.dumps([[_entry(x) for x in row] for row in m])


def to_fraction(s):
    """Parse an exact rational string from a report."""
    return Fraction(s)


def run_suite(name, n=0, seed=1, trials=-1, workers=1, tol=1e-12):
    return json.loads(_tpw.run_suite(name, n, seed, trials, workers, tol))


def sample(n, seed=1, trial=0):
    return json.loads(_tpw.sample(n, seed, trial))


def realize(cell):
    return json.loads(_tpw.realize(json.dumps(cell)))


def factor_cell(matrix):
    return json.loads(_tpw.factor_cell(_matrix_text(matrix)))


def classify(matrix):
    return json.loads(_tpw.classify(_matrix_text(matrix)))


def check_conjecture(matrix):
    return json.loads(_tpw.check_conjecture(_matrix_text(matrix)))


def t_gt1_witness(spectrum, tol=1e-12):
    return json.loads(_tpw.t_gt1_witness([_entry(x) for x in spectrum], tol))
