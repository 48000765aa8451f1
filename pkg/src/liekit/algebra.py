"""Lie algebras given by structure constants, and their basic structure theory.

Basis indices are 1-based wherever a user sees them (constructor tables,
``table``, reports) so they line up with the usual ``e1, ..., en``
notation. Coordinate vectors are ordinary 0-based tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .linalg import (
    DimensionError,
    Matrix,
    Subspace,
    ZERO,
    null_space_of_rows,
    solve,
    to_scalar,
    unit_vector,
    vector,
)


class NotAnIdealError(ValueError):
    pass


def _pairs_from(entries) -> Iterable:
    if isinstance(entries, Mapping):
        return entries.items()
    return entries


class LieAlgebra:
    """A finite-dimensional Lie algebra over Q.

    ``table`` maps 1-based pairs ``(i, j)`` with ``i < j`` to the terms of
    ``[e_i, e_j]``, either as a ``{k: coeff}`` mapping or a sequence of
    ``(k, coeff)`` pairs. Repeated targets are summed and zero coefficients
    dropped, so the stored table is canonical. The Jacobi identity is *not*
    enforced here; see :func:`check_jacobi`.
    """

    def __init__(self, dim: int, table: Mapping = None, labels: Optional[Sequence[str]] = None):
        if dim < 0:
            raise ValueError("dimension must be nonnegative")
        self.dim = dim
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError(f"{len(self.labels)} basis labels for dimension {dim}")
        canonical = {}
        for (i, j), entries in (table or {}).items():
            if not (1 <= i <= dim and 1 <= j <= dim):
                raise IndexError(f"bracket [e{i}, e{j}] out of range for dimension {dim}")
            if i >= j:
                raise ValueError(f"bracket keys need i < j, got ({i}, {j})")
            terms = {}
            for k, c in _pairs_from(entries):
                if not 1 <= k <= dim:
                    raise IndexError(f"target e{k} out of range for dimension {dim}")
                terms[k] = terms.get(k, ZERO) + to_scalar(c)
            terms = tuple(sorted((k, c) for k, c in terms.items() if c))
            if terms:
                canonical[(i, j)] = terms
        self.table = dict(sorted(canonical.items()))
        # 0-based, both orders: (i, j) -> ((k, c), ...)
        self._sc = {}
        for (i, j), terms in self.table.items():
            self._sc[(i - 1, j - 1)] = tuple((k - 1, c) for k, c in terms)
            self._sc[(j - 1, i - 1)] = tuple((k - 1, -c) for k, c in terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self.table.items())))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, brackets={len(self.table)})"

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        """``c_{ij}^k`` with 1-based indices."""
        for t, c in self._sc.get((i - 1, j - 1), ()):
            if t == k - 1:
                return c
        return ZERO

    def basis_bracket(self, i: int, j: int) -> tuple:
        """``[e_i, e_j]`` as a coordinate vector, 0-based indices."""
        out = [ZERO] * self.dim
        for k, c in self._sc.get((i, j), ()):
            out[k] = c
        return tuple(out)

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        x = vector(x)
        y = vector(y)
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionError(f"vectors of length {len(x)}, {len(y)} in a {self.dim}-dimensional algebra")
        out = [ZERO] * self.dim
        for (i, j), terms in self._sc.items():
            a = x[i]
            if not a:
                continue
            b = y[j]
            if not b:
                continue
            ab = a * b
            for k, c in terms:
                out[k] += ab * c
        return tuple(out)

    def nonzero_constants(self) -> Iterable:
        """Yield ``(i, j, k, c)`` 0-based for every stored ``i < j`` constant."""
        for (i, j), terms in self.table.items():
            for k, c in terms:
                yield i - 1, j - 1, k - 1, c

    def is_abelian(self) -> bool:
        return not self.table


@dataclass(frozen=True)
class JacobiViolation:
    i: int
    j: int
    k: int
    residual: tuple

    def __str__(self) -> str:
        return f"Jacobi identity fails on (e{self.i}, e{self.j}, e{self.k}); residual {list(map(str, self.residual))}"


def check_jacobi(g: LieAlgebra) -> Optional[JacobiViolation]:
    """Return the first failing triple in lexicographic order, or None if Jacobi holds."""
    n = g.dim
    basis = [unit_vector(n, i) for i in range(n)]
    br = g.bracket
    inner = {}
    for i in range(n):
        for j in range(i + 1, n):
            inner[(i, j)] = g.basis_bracket(i, j)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                a = br(basis[i], inner[(j, k)])
                b = br(basis[j], tuple(-c for c in inner[(i, k)]))
                c = br(basis[k], inner[(i, j)])
                residual = tuple(x + y + z for x, y, z in zip(a, b, c))
                if any(residual):
                    return JacobiViolation(i + 1, j + 1, k + 1, residual)
    return None


def ad(g: LieAlgebra, x: Sequence) -> Matrix:
    """Matrix of ``y -> [x, y]``; column ``j`` is ``[x, e_j]``."""
    x = vector(x)
    if len(x) != g.dim:
        raise DimensionError(f"vector of length {len(x)} in a {g.dim}-dimensional algebra")
    cols = [[ZERO] * g.dim for _ in range(g.dim)]
    for (i, j), terms in g._sc.items():
        a = x[i]
        if a:
            for k, c in terms:
                cols[j][k] += a * c
    return Matrix.from_columns(cols, nrows=g.dim) if g.dim else Matrix([], ncols=0)


def center(g: LieAlgebra) -> Subspace:
    """``{x : [x, y] = 0 for all y}`` as the joint kernel of the ``ad(e_j)``."""
    n = g.dim
    # row (j, k): coefficient of e_k in [x, e_j] = sum_i x_i c_{ij}^k
    rows = {}
    for (i, j), terms in g._sc.items():
        for k, c in terms:
            r = rows.setdefault((j, k), {})
            r[i] = r.get(i, ZERO) + c
    return null_space_of_rows([{c: a for c, a in r.items() if a} for r in rows.values()], n)


def bracket_spaces(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """The span of all ``[x, y]`` with ``x`` in ``a`` and ``y`` in ``b``."""
    vs = [g.bracket(x, y) for x in a.basis for y in b.basis]
    return Subspace.span(vs, g.dim)


def lower_central_series(g: LieAlgebra) -> list:
    """``[g^1, g^2, ...]`` with ``g^{k+1} = [g, g^k]``, stopping at the first repeat."""
    whole = Subspace.full(g.dim)
    series = [whole]
    while True:
        nxt = bracket_spaces(g, whole, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


@dataclass(frozen=True)
class InvariantReport:
    dim: int
    center_dim: int
    lcs_dims: tuple
    nilpotent: bool
    nilpotency_index: Optional[int]
    filiform: bool

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "center_dim": self.center_dim,
            "lcs_dims": list(self.lcs_dims),
            "nilpotent": self.nilpotent,
            "nilpotency_index": self.nilpotency_index,
            "filiform": self.filiform,
        }


def invariants(g: LieAlgebra) -> InvariantReport:
    series = lower_central_series(g)
    dims = tuple(s.dim for s in series)
    nilpotent = dims[-1] == 0
    # g^{c+1} = 0 first at list position c
    index = len(dims) - 1 if nilpotent else None
    filiform = nilpotent and g.dim >= 3 and index == g.dim - 1
    return InvariantReport(g.dim, center(g).dim, dims, nilpotent, index, filiform)


def is_nilpotent(g: LieAlgebra) -> bool:
    return lower_central_series(g)[-1].is_zero()


def is_ideal(g: LieAlgebra, s: Subspace) -> bool:
    if s.ambient_dim != g.dim:
        raise DimensionError(f"subspace of Q^{s.ambient_dim} in a {g.dim}-dimensional algebra")
    for b in s.basis:
        for i in range(g.dim):
            if not s.contains(g.bracket(unit_vector(g.dim, i), b)):
                return False
    return True


def quotient(g: LieAlgebra, ideal: Subspace) -> tuple:
    """Quotient ``g / ideal`` and the projection matrix onto it.

    The quotient basis is the image of the unit vectors at the non-pivot
    coordinates of the ideal's RREF basis, in increasing order, and keeps
    their labels. ``projection`` is ``(dim g - dim ideal) x dim g``.
    """
    if not is_ideal(g, ideal):
        raise NotAnIdealError("subspace is not an ideal")
    keep = ideal.complement_indices()

    def project(v):
        r = ideal.reduce(v)
        return tuple(r[c] for c in keep)

    proj_cols = [project(unit_vector(g.dim, j)) for j in range(g.dim)]
    projection = Matrix.from_columns(proj_cols, nrows=len(keep)) if g.dim else Matrix([], ncols=0)
    table = {}
    for a, ca in enumerate(keep):
        for b in range(a + 1, len(keep)):
            image = project(g.basis_bracket(ca, keep[b]))
            terms = {k + 1: c for k, c in enumerate(image) if c}
            if terms:
                table[(a + 1, b + 1)] = terms
    q = LieAlgebra(len(keep), table, labels=[g.labels[c] for c in keep])
    return q, projection


def change_basis(g: LieAlgebra, new_basis: Sequence[Sequence], labels: Optional[Sequence[str]] = None) -> LieAlgebra:
    """Re-express ``g`` in the basis whose vectors (old coordinates) are ``new_basis``."""
    n = g.dim
    vecs = [vector(v) for v in new_basis]
    if len(vecs) != n:
        raise DimensionError(f"{len(vecs)} basis vectors for dimension {n}")
    change = Matrix.from_columns(vecs, nrows=n)
    if change.rank() != n:
        raise ValueError("new basis vectors are linearly dependent")
    table = {}
    for a in range(n):
        for b in range(a + 1, n):
            coords = solve(change, g.bracket(vecs[a], vecs[b]))
            terms = {k + 1: c for k, c in enumerate(coords) if c}
            if terms:
                table[(a + 1, b + 1)] = terms
    return LieAlgebra(n, table, labels=labels)
