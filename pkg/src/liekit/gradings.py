"""Diagonal gradings, dilations and expanding automorphisms.

A weight vector ``w`` grades ``g`` in its given basis when every nonzero
structure constant ``c_ij^k`` has ``w_k = w_i + w_j``. Positive integer
weights give the dilations ``delta_t = diag(t^w_1, ..., t^w_n)``, which
are computed only at rational ``t`` so everything stays exact.

The search is relative to the given basis; an algebra may admit dilations
that no diagonal grading of its current basis exhibits, and
:func:`dilation_status` answers ``Unknown`` in that case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import LieAlgebra, is_nilpotent
from .derivations import characteristic_nilpotency
from .linalg import (
    DimensionError,
    Matrix,
    ZERO,
    primitive_integer_vector,
    strict_positive_point,
    to_scalar,
    vector,
)


def verify_grading(g: LieAlgebra, weights: Sequence) -> Optional[tuple]:
    """None if ``weights`` grade ``g``, else the first bad ``(i, j, k)`` (1-based)."""
    w = vector(weights)
    if len(w) != g.dim:
        raise DimensionError(f"{len(w)} weights for a {g.dim}-dimensional algebra")
    for i, j, k, _ in g.nonzero_constants():
        if w[k] != w[i] + w[j]:
            return (i + 1, j + 1, k + 1)
    return None


def grading_equations(g: LieAlgebra) -> Matrix:
    """One row ``w_k - w_i - w_j`` per distinct nonzero structure-constant pattern."""
    seen = set()
    rows = []
    for i, j, k, _ in g.nonzero_constants():
        row = [ZERO] * g.dim
        row[k] += 1
        row[i] -= 1
        row[j] -= 1
        key = tuple(row)
        if key not in seen:
            seen.add(key)
            rows.append(key)
    return Matrix(rows, ncols=g.dim)


def search_positive_diagonal_grading(g: LieAlgebra) -> Optional[tuple]:
    """Smallest positive integer weights grading ``g`` in its basis, or None."""
    point = strict_positive_point(grading_equations(g), g.dim)
    if point is None:
        return None
    return primitive_integer_vector(point)


def _integer_weights(weights: Sequence) -> tuple:
    out = []
    for a in weights:
        a = to_scalar(a)
        if a.denominator != 1:
            raise ValueError(f"dilation weights must be integers, got {a}")
        out.append(int(a))
    return tuple(out)


def dilation_matrix(g: LieAlgebra, weights: Sequence, t) -> Matrix:
    """``delta_t = diag(t^w_i)``; an automorphism whenever ``weights`` grade ``g``."""
    w = _integer_weights(weights)
    bad = verify_grading(g, w)
    if bad is not None:
        raise ValueError(f"weights do not grade the algebra: violated at (e{bad[0]}, e{bad[1]}, e{bad[2]})")
    t = to_scalar(t)
    if t <= 0:
        raise ValueError("dilation parameter t must be positive")
    return Matrix.diag(t ** e for e in w)


def verify_automorphism(g: LieAlgebra, phi: Matrix) -> bool:
    n = g.dim
    if phi.shape != (n, n):
        raise DimensionError(f"expected a {n}x{n} matrix, got {phi.shape}")
    if phi.rank() != n:
        raise ValueError("matrix is singular")
    images = [phi.column(j) for j in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if phi @ g.basis_bracket(i, j) != g.bracket(images[i], images[j]):
                return False
    return True


def exponents_in_base(phi: Matrix, t) -> Optional[tuple]:
    """Integers ``e_i`` with ``phi = diag(t^e_i)``, or None if ``phi`` is not of that form."""
    t = to_scalar(t)
    if t <= 0 or t == 1:
        raise ValueError("base must be positive and different from 1")
    if not phi.is_square() or not phi.is_diagonal():
        return None
    out = []
    for d in phi.diagonal():
        if d <= 0:
            return None
        e = 0
        value = Fraction(1)
        up = (d > 1) == (t > 1)
        step = t if up else 1 / t
        # |exponent| is bounded by the bit sizes involved
        limit = d.numerator.bit_length() + d.denominator.bit_length() + 1
        while value != d and abs(e) <= limit:
            value *= step
            e += 1 if up else -1
        if value != d:
            return None
        out.append(e)
    return tuple(out)


def classify_diagonal_automorphism(g: LieAlgebra, phi: Matrix) -> str:
    """``expanding``, ``hyperbolic`` or ``neither`` for a diagonal automorphism.

    The eigenvalues of a diagonal matrix are its diagonal, so no eigenvalue
    computation is needed; non-diagonal input is rejected.
    """
    if not phi.is_diagonal():
        raise ValueError("only diagonal automorphisms are classified")
    if not verify_automorphism(g, phi):
        raise ValueError("matrix is not an automorphism")
    mods = [abs(d) for d in phi.diagonal()]
    if mods and all(m > 1 for m in mods):
        return "expanding"
    if any(m == 1 for m in mods):
        return "neither"
    if any(m > 1 for m in mods) and any(m < 1 for m in mods):
        return "hyperbolic"
    return "neither"


@dataclass(frozen=True)
class Dilations:
    weights: tuple
    kind = "dilations"

    def as_dict(self) -> dict:
        return {"status": self.kind, "weights": [int(w) for w in self.weights]}


@dataclass(frozen=True)
class NoDilations:
    reason: str  # "not-nilpotent" | "characteristically-nilpotent"
    kind = "no-dilations"

    def as_dict(self) -> dict:
        return {"status": self.kind, "reason": self.reason}


@dataclass(frozen=True)
class Unknown:
    note: str
    kind = "unknown"

    def as_dict(self) -> dict:
        return {"status": self.kind, "note": self.note}


DilationStatus = (Dilations, NoDilations, Unknown)

UNKNOWN_NOTE = "diagonal search in the given basis failed; basis-independent search not implemented"


def dilation_status(g: LieAlgebra):
    """Sound three-way answer to "does ``g`` admit a family of dilations?"."""
    if not is_nilpotent(g):
        return NoDilations("not-nilpotent")
    if characteristic_nilpotency(g).all_nilpotent:
        return NoDilations("characteristically-nilpotent")
    weights = search_positive_diagonal_grading(g)
    if weights is not None:
        return Dilations(weights)
    return Unknown(UNKNOWN_NOTE)


def expanding_check(g: LieAlgebra, weights: Sequence, t=2) -> bool:
    """``delta_t`` for positive ``weights`` is an automorphism with every eigenvalue above 1."""
    phi = dilation_matrix(g, weights, t)
    return verify_automorphism(g, phi) and all(d > 1 for d in phi.diagonal())
