"""Coadjoint linear algebra: the form B_l(x, y) = l([x, y]) and its radical."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .algebra import LieAlgebra, center
from .linalg import DimensionError, Matrix, Subspace, ZERO, kernel_basis, unit_vector, vector

#: Functional coordinates are drawn uniformly from this integer range.
SAMPLE_RANGE = (-10, 10)


def dual_basis(n: int, k: int) -> tuple:
    """Coordinates of ``e_k*`` (1-based ``k``)."""
    if not 1 <= k <= n:
        raise IndexError(f"dual basis index {k} out of range 1..{n}")
    return unit_vector(n, k - 1)


def bform(g: LieAlgebra, functional: Sequence) -> Matrix:
    """Skew matrix with entry ``(i, j) = l([e_i, e_j])``."""
    ell = vector(functional)
    if len(ell) != g.dim:
        raise DimensionError(f"functional of length {len(ell)} on a {g.dim}-dimensional algebra")
    rows = [[ZERO] * g.dim for _ in range(g.dim)]
    for (i, j), terms in g._sc.items():
        rows[i][j] = sum((c * ell[k] for k, c in terms if ell[k]), ZERO)
    return Matrix(rows, ncols=g.dim)


def radical(g: LieAlgebra, functional: Sequence) -> Subspace:
    """``g(l) = {y : l([x, y]) = 0 for all x}``, the kernel of :func:`bform`."""
    return kernel_basis(bform(g, functional))


def flat_orbit(g: LieAlgebra, functional: Sequence) -> bool:
    """True when the radical of ``functional`` is exactly the center."""
    return radical(g, functional) == center(g)


@dataclass(frozen=True)
class IndexEstimate:
    """Smallest radical dimension seen over sampled functionals.

    This is a sampled upper bound on the index; it is not a certificate.
    """

    min_radical_dim: int
    functional: tuple
    samples: int
    seed: int

    def as_dict(self) -> dict:
        return {
            "min_radical_dim": self.min_radical_dim,
            "kind": "sampled upper bound",
            "functional": [str(a) for a in self.functional],
            "samples": self.samples,
            "seed": self.seed,
        }


def random_functional(n: int, rng: random.Random) -> tuple:
    lo, hi = SAMPLE_RANGE
    return vector(rng.randint(lo, hi) for _ in range(n))


def generic_index(g: LieAlgebra, samples: int, seed: int) -> IndexEstimate:
    """Minimum of ``dim g(l)`` over ``samples`` seeded random integer functionals.

    The first functional attaining the minimum is returned as the witness.
    """
    if samples < 1:
        raise ValueError("need at least one sample")
    rng = random.Random(seed)
    best = None
    witness = None
    for _ in range(samples):
        ell = random_functional(g.dim, rng)
        d = radical(g, ell).dim
        if best is None or d < best:
            best, witness = d, ell
    return IndexEstimate(best, witness, samples, seed)
