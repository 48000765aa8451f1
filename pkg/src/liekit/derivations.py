"""Derivation algebras, Engel's flag test and characteristic nilpotency.

Matrices act on column vectors: column ``j`` of ``D`` is ``D(e_j)``. The
derivation equations are solved for ``vec(D)`` in column-major order, so
the basis returned by :func:`derivation_space` is the RREF kernel basis in
that coordinate order and is reproducible run to run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .algebra import LieAlgebra
from .linalg import (
    DimensionError,
    Matrix,
    Subspace,
    ZERO,
    kernel_basis,
    null_space_of_rows,
    to_scalar,
    unit_vector,
)

DEFAULT_SEED = 0
WITNESS_TRIALS = 64


@dataclass(frozen=True)
class MatrixSpace:
    """A linearly independent list of ``n x n`` matrices.

    ``bracket_closed`` is only ever set after checking that every commutator
    of basis elements lies in the span.
    """

    ambient_dim: int
    basis: tuple
    bracket_closed: bool = False

    @classmethod
    def from_matrices(cls, matrices: Iterable[Matrix], n: int, check_closure: bool = True) -> "MatrixSpace":
        mats = tuple(matrices)
        for m in mats:
            if m.shape != (n, n):
                raise DimensionError(f"expected {n}x{n} matrices, got {m.shape}")
        span = Subspace.span([m.vec() for m in mats], n * n)
        if span.dim != len(mats):
            raise ValueError("matrices are linearly dependent")
        space = cls(n, mats, False)
        if check_closure and space.commutators_in_span():
            space = cls(n, mats, True)
        return space

    @classmethod
    def spanned_by(cls, matrices: Iterable[Matrix], n: int) -> "MatrixSpace":
        """Space spanned by ``matrices`` (dependencies allowed), basis = RREF of their vecs."""
        span = Subspace.span([m.vec() for m in matrices], n * n)
        return cls.from_matrices([Matrix.from_vec(v, n) for v in span.basis], n)

    @classmethod
    def lie_closure(cls, matrices: Iterable[Matrix], n: int) -> "MatrixSpace":
        """Smallest commutator-closed space containing ``matrices``."""
        span = Subspace.span([m.vec() for m in matrices], n * n)
        while True:
            mats = [Matrix.from_vec(v, n) for v in span.basis]
            new = [a.commutator(b).vec() for i, a in enumerate(mats) for b in mats[i + 1:]]
            grown = span + Subspace.span(new, n * n)
            if grown == span:
                return cls(n, tuple(mats), True)
            span = grown

    @cached_property
    def span(self) -> Subspace:
        return Subspace.span([m.vec() for m in self.basis], self.ambient_dim ** 2)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, m: Matrix) -> bool:
        return self.span.contains(m.vec())

    __contains__ = contains

    def commutators_in_span(self) -> bool:
        return all(
            self.contains(a.commutator(b))
            for i, a in enumerate(self.basis)
            for b in self.basis[i + 1:]
        )

    def combination(self, coeffs: Sequence) -> Matrix:
        if len(coeffs) != len(self.basis):
            raise DimensionError(f"{len(coeffs)} coefficients for a {len(self.basis)}-dimensional space")
        n = self.ambient_dim
        acc = [[ZERO] * n for _ in range(n)]
        # accumulate over nonzero entries only; basis matrices are typically sparse
        for c, m in zip(coeffs, self.basis):
            if c:
                c = to_scalar(c)
                for r, row in enumerate(m.rows):
                    out_row = acc[r]
                    for j, x in enumerate(row):
                        if x:
                            out_row[j] += c * x
        return Matrix(acc, ncols=n)

    def random_element(self, rng: random.Random, bound: int = 10) -> Matrix:
        return self.combination([rng.randint(-bound, bound) for _ in self.basis])


@dataclass(frozen=True)
class EngelVerdict:
    all_nilpotent: bool
    flag_dims: tuple = ()
    witness: Optional[Matrix] = field(default=None, compare=False)

    def __bool__(self) -> bool:
        return self.all_nilpotent


def _as_matrix(d) -> Matrix:
    return d if isinstance(d, Matrix) else Matrix(d)


def is_derivation(g: LieAlgebra, d: Matrix) -> bool:
    d = _as_matrix(d)
    n = g.dim
    if d.shape != (n, n):
        raise DimensionError(f"expected a {n}x{n} matrix, got {d.shape}")
    images = [d.column(j) for j in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            lhs = d @ g.basis_bracket(i, j)
            a = g.bracket(images[i], unit_vector(n, j))
            b = g.bracket(unit_vector(n, i), images[j])
            if any(x != y + z for x, y, z in zip(lhs, a, b)):
                return False
    return True


def derivation_equations(g: LieAlgebra) -> list:
    """Sparse rows of the linear system ``D[e_i, e_j] = [De_i, e_j] + [e_i, De_j]``, ``i < j``.

    Unknown ``D[r][c]`` has column index ``c * n + r``. One row per pair and
    output coordinate; identically zero rows are dropped.
    """
    n = g.dim
    sc = g._sc
    by_second = {}  # j -> [(r, terms of [e_r, e_j])]
    by_first = {}   # i -> [(r, terms of [e_i, e_r])]
    for (a, b), terms in sc.items():
        by_second.setdefault(b, []).append((a, terms))
        by_first.setdefault(a, []).append((b, terms))
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            eqs = {}
            for k, c in sc.get((i, j), ()):
                for m in range(n):
                    r = eqs.setdefault(m, {})
                    idx = k * n + m
                    r[idx] = r.get(idx, ZERO) + c
            for r_, terms in by_second.get(j, ()):
                idx = i * n + r_
                for m, c in terms:
                    r = eqs.setdefault(m, {})
                    r[idx] = r.get(idx, ZERO) - c
            for r_, terms in by_first.get(i, ()):
                idx = j * n + r_
                for m, c in terms:
                    r = eqs.setdefault(m, {})
                    r[idx] = r.get(idx, ZERO) - c
            for m in sorted(eqs):
                row = {x: a for x, a in eqs[m].items() if a}
                if row:
                    rows.append(row)
    return rows


def derivation_space(g: LieAlgebra) -> MatrixSpace:
    """Basis of ``Der(g)``, verified closed under commutators."""
    n = g.dim
    kernel = null_space_of_rows(derivation_equations(g), n * n)
    mats = tuple(Matrix.from_vec(v, n) for v in kernel.basis)
    space = MatrixSpace(n, mats, False)
    if not space.commutators_in_span():
        raise AssertionError("derivation space failed the commutator-closure check")
    return MatrixSpace(n, mats, True)


def _induced_action(ops: list, kernel: Subspace) -> list:
    """Matrices of the induced maps on ``V / kernel``, in the complement coordinates."""
    keep = kernel.complement_indices()
    out = []
    for a in ops:
        cols = []
        for c in keep:
            img = kernel.reduce(a.column(c))
            cols.append([img[k] for k in keep])
        out.append(Matrix.from_columns(cols, nrows=len(keep)))
    return out


def engel_all_nilpotent(space: MatrixSpace, seed: int = DEFAULT_SEED,
                        witness_trials: int = WITNESS_TRIALS) -> EngelVerdict:
    """Decide whether every element of a commutator-closed space is nilpotent.

    Repeatedly takes the joint kernel of the operators and passes to the
    induced action on the quotient. The space is nilpotent exactly when this
    flag reaches the whole space; a zero joint kernel on a nonzero quotient
    means (by Engel's theorem) some element is not nilpotent. In that case a
    witness is searched among the basis and ``witness_trials`` seeded random
    combinations; not finding one does not change the verdict.
    """
    if not space.bracket_closed:
        raise ValueError("Engel test needs a space verified closed under commutators")
    n = space.ambient_dim
    ops = list(space.basis)
    remaining = n
    flag = []
    covered = 0
    while remaining:
        if ops:
            stacked = Matrix.vstack(ops, remaining)
            kernel = kernel_basis(stacked)
        else:
            kernel = Subspace.full(remaining)
        if kernel.is_zero():
            return EngelVerdict(False, tuple(flag), _find_witness(space, seed, witness_trials))
        covered += kernel.dim
        flag.append(covered)
        if kernel.is_full():
            break
        ops = [m for m in _induced_action(ops, kernel) if not m.is_zero()]
        remaining -= kernel.dim
    return EngelVerdict(True, tuple(flag), None)


def _is_nilpotent_matrix(m: Matrix) -> bool:
    return (m ** m.nrows).is_zero()


def _find_witness(space: MatrixSpace, seed: int, trials: int) -> Optional[Matrix]:
    for m in space.basis:
        if not _is_nilpotent_matrix(m):
            return m
    rng = random.Random(seed)
    for _ in range(trials):
        m = space.random_element(rng)
        if not _is_nilpotent_matrix(m):
            return m
    return None


def characteristic_nilpotency(g: LieAlgebra, seed: int = DEFAULT_SEED) -> EngelVerdict:
    """Engel verdict on ``Der(g)``; ``all_nilpotent`` means characteristically nilpotent."""
    return engel_all_nilpotent(derivation_space(g), seed=seed)


def is_characteristically_nilpotent(g: LieAlgebra) -> bool:
    return characteristic_nilpotency(g).all_nilpotent


def diagonal_derivation_space(g: LieAlgebra) -> Subspace:
    """Weights ``w`` such that ``diag(w)`` is a derivation: ``w_i + w_j = w_k`` whenever ``c_ij^k != 0``."""
    rows = []
    for i, j, k, _ in g.nonzero_constants():
        row = {}
        for idx, a in ((i, 1), (j, 1), (k, -1)):
            row[idx] = row.get(idx, ZERO) + a
        rows.append({idx: a for idx, a in row.items() if a})
    return null_space_of_rows(rows, g.dim)
