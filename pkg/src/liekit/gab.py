"""The two-parameter family g(alpha, beta) of 11-dimensional filiform algebras.

This is the single place the published data is transcribed: the bracket
table, the printed derivation basis D1..D12 of the central quotient, and
the printed linear system for the radical of ``e11*``. Coefficients are
written in the same grouped form as the source so each line can be
compared by eye; the expression parser expands them.
"""

from __future__ import annotations

from fractions import Fraction
from importlib import resources

from .algebra import LieAlgebra, center, quotient
from .expr import parse_coefficient
from .families import LieFamily
from .linalg import Matrix, to_scalar

PARAMS = ("alpha", "beta")

GAMMA = "27*alpha^2 + 12*alpha*beta + beta^2"

# [e_i, e_j] -> [(k, coefficient), ...]; brackets not listed are zero.
BRACKETS = {
    # [e1, ei] = e_{i+1} for 1 <= i <= 10
    **{(1, i): [(i + 1, "1")] for i in range(2, 11)},
    (2, 3): [(5, "1"), (6, "alpha")],
    (2, 4): [(6, "1"), (7, "alpha")],
    (2, 5): [(7, "-1"), (8, "alpha - beta")],
    (2, 6): [(8, "-3"), (9, "alpha - 2*beta")],
    (2, 7): [(9, "-2"), (10, "-1/4*(5*alpha + 7*beta)"), (11, f"1/16*({GAMMA})")],
    (2, 8): [(10, "2"), (11, "-1/4*(23*alpha + beta)")],
    (2, 9): [(11, "-1")],
    (3, 4): [(7, "2"), (8, "beta")],
    (3, 5): [(8, "2"), (9, "beta")],
    (3, 6): [(9, "-1"), (10, "1/4*(9*alpha - beta)"), (11, f"-1/16*({GAMMA})")],
    (3, 7): [(10, "-4"), (11, "3/2*(3*alpha - beta)")],
    (3, 8): [(11, "3")],
    (4, 5): [(9, "3"), (10, "-1/4*(9*alpha - 5*beta)"), (11, f"1/16*({GAMMA})")],
    (4, 6): [(10, "3"), (11, "-1/4*(9*alpha - 5*beta)")],
    (4, 7): [(11, "-7")],
    (5, 6): [(11, "10")],
}

# Derivations of g(alpha, beta)/z as sums of matrix units E_{row,col} (1-based),
# valid when 3*alpha + beta != 0.
QUOTIENT_DERIVATIONS = [
    # D1
    [(3, 1, "1"), (5, 3, "-1"), (6, 3, "-alpha"), (6, 4, "-1"), (7, 4, "-alpha"),
     (7, 5, "1"), (8, 5, "beta - alpha"), (8, 6, "3"), (9, 6, "2*beta - alpha"),
     (9, 7, "2"), (10, 7, "(5*alpha + 7*beta)/4"), (10, 8, "-2")],
    # D2
    [(4, 1, "1"), (5, 2, "1"), (6, 2, "alpha"), (7, 4, "-2"), (8, 4, "-beta"),
     (8, 5, "-2"), (9, 5, "-beta"), (9, 6, "1"), (10, 6, "(beta - 9*alpha)/4"),
     (10, 7, "4")],
    # D3
    [(5, 1, "1"), (6, 2, "1"), (7, 2, "alpha"), (7, 3, "2"), (8, 3, "beta"),
     (9, 5, "-3"), (10, 5, "(9*alpha - 5*beta)/4"), (10, 6, "-3")],
    # D4
    [(6, 1, "1"), (7, 2, "-1"), (8, 3, "2"), (9, 3, "2*beta - alpha"), (9, 4, "3"),
     (10, 4, "(9*beta - 13*alpha)/4")],
    # D5
    [(7, 1, "1"), (9, 3, "2"), (10, 3, "(5*alpha + 7*beta)/4")],
    # D6
    [(8, 1, "1"), (10, 3, "-2")],
    # D7
    [(9, 1, "1")],
    # D8
    [(10, 1, "1")],
    # D9
    [(i + 1, i, "1") for i in range(2, 10)],
    # D10
    [(8, 2, "1"), (9, 3, "1"), (10, 4, "1")],
    # D11
    [(9, 2, "1"), (10, 3, "1")],
    # D12
    [(10, 2, "1")],
]

# The system printed for x in g(e11*): one row per equation, (variable, coefficient).
RADICAL_SYSTEM = [
    [(10, "1")],
    [(7, GAMMA), (8, "-4*(23*alpha + beta)"), (9, "-16")],
    [(6, GAMMA), (7, "-24*(3*alpha - beta)"), (8, "-48")],
    [(5, GAMMA), (6, "-4*(9*alpha - 5*beta)"), (7, "-112")],
    [(4, GAMMA), (6, "-160")],
    [(3, GAMMA), (4, "4*(9*alpha - 5*beta)"), (5, "-160")],
    [(2, GAMMA), (3, "24*(3*alpha - beta)"), (4, "-112")],
    [(2, "23*alpha + beta"), (3, "-12")],
    [(2, "1")],
    [(1, "1")],
]


def _coef(text: str):
    return parse_coefficient(text, PARAMS)


def _values(alpha, beta) -> dict:
    return {"alpha": to_scalar(alpha), "beta": to_scalar(beta)}


def gab_family() -> LieFamily:
    table = {key: [(k, _coef(c)) for k, c in terms] for key, terms in BRACKETS.items()}
    return LieFamily(11, PARAMS, table)


def gab(alpha, beta) -> LieAlgebra:
    return gab_family().specialize(_values(alpha, beta))


def gab_quotient(alpha, beta) -> LieAlgebra:
    """``g(alpha, beta) / z``, 10-dimensional with basis e1..e10."""
    g = gab(alpha, beta)
    q, _ = quotient(g, center(g))
    return q


def quotient_derivation_basis(alpha, beta) -> list:
    """The printed D1..D12 as 10x10 matrices at the given parameters."""
    values = _values(alpha, beta)
    mats = []
    for entries in QUOTIENT_DERIVATIONS:
        rows = [[Fraction(0)] * 10 for _ in range(10)]
        for r, c, text in entries:
            rows[r - 1][c - 1] += _coef(text).evaluate(values)
        mats.append(Matrix(rows, ncols=10))
    return mats


def radical_system(alpha, beta) -> Matrix:
    """The printed equations for ``g(e11*)`` as a 10 x 11 coefficient matrix."""
    values = _values(alpha, beta)
    rows = []
    for eq in RADICAL_SYSTEM:
        row = [Fraction(0)] * 11
        for var, text in eq:
            row[var - 1] += _coef(text).evaluate(values)
        rows.append(row)
    return Matrix(rows, ncols=11)


# Known misprint: the printed D5 lacks a 6*E_{10,4} term. Without it
# D5([e1, e3]) = 0 while [D5 e1, e3] + [e1, D5 e3] = 6*e10.
ERRATA = {
    5: [(10, 4, "6")],
}


def corrected_quotient_derivation_basis(alpha, beta) -> list:
    """D1..D12 with the entries in :data:`ERRATA` added."""
    mats = quotient_derivation_basis(alpha, beta)
    values = _values(alpha, beta)
    for number, entries in ERRATA.items():
        m = mats[number - 1]
        for r, c, text in entries:
            m = m.replace(r - 1, c - 1, m[r - 1, c - 1] + _coef(text).evaluate(values))
        mats[number - 1] = m
    return mats


def shipped_family_text() -> str:
    """Contents of the bundled ``gab.family.json``."""
    return resources.files("liekit").joinpath("data/gab.family.json").read_text(encoding="utf-8")
