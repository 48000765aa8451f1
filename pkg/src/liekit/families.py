"""Parametric Lie algebra families and a few standard example algebras."""

from __future__ import annotations

from typing import Mapping, Optional, Sequence

from .algebra import LieAlgebra
from .linalg import to_scalar
from .polynomial import Polynomial


class LieFamily:
    """Structure constants whose coefficients are polynomials in ``params``.

    ``table`` has the same shape as for :class:`LieAlgebra` (1-based ``i < j``
    keys) but coefficients may be :class:`Polynomial` values or plain
    rationals.
    """

    def __init__(self, dim: int, params: Sequence[str], table: Mapping,
                 labels: Optional[Sequence[str]] = None):
        self.dim = dim
        self.params = tuple(params)
        if len(set(self.params)) != len(self.params):
            raise ValueError("duplicate parameter names")
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i + 1}" for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError(f"{len(self.labels)} basis labels for dimension {dim}")
        known = set(self.params)
        canonical = {}
        for (i, j), entries in table.items():
            if not (1 <= i < j <= dim):
                raise ValueError(f"invalid bracket key ({i}, {j}) for dimension {dim}")
            items = entries.items() if isinstance(entries, Mapping) else entries
            terms = {}
            for k, c in items:
                if not 1 <= k <= dim:
                    raise IndexError(f"target e{k} out of range for dimension {dim}")
                c = Polynomial.coerce(c)
                unknown = c.variables() - known
                if unknown:
                    raise ValueError(f"coefficient of e{k} in [e{i}, e{j}] uses unknown parameter(s) {sorted(unknown)}")
                terms[k] = terms.get(k, Polynomial()) + c
            terms = tuple(sorted((k, c) for k, c in terms.items() if c))
            if terms:
                canonical[(i, j)] = terms
        self.table = dict(sorted(canonical.items()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieFamily):
            return NotImplemented
        return (self.dim, self.params, self.table) == (other.dim, other.params, other.table)

    def __repr__(self) -> str:
        return f"LieFamily(dim={self.dim}, params={self.params})"

    def coefficient(self, i: int, j: int, k: int) -> Polynomial:
        for t, c in self.table.get((i, j), ()):
            if t == k:
                return c
        return Polynomial()

    def specialize(self, assignment: Mapping) -> LieAlgebra:
        return specialize(self, assignment)


def specialize(family: LieFamily, assignment: Mapping) -> LieAlgebra:
    """Evaluate every coefficient at ``assignment``; zero constants are pruned."""
    given = set(assignment)
    missing = set(family.params) - given
    extra = given - set(family.params)
    if missing:
        raise ValueError(f"missing value for parameter(s) {', '.join(sorted(missing))}")
    if extra:
        raise ValueError(f"unknown parameter(s) {', '.join(sorted(extra))}")
    values = {k: to_scalar(v) for k, v in assignment.items()}
    table = {
        key: {k: c.evaluate(values) for k, c in terms}
        for key, terms in family.table.items()
    }
    return LieAlgebra(family.dim, table, labels=family.labels)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {})


def heisenberg(n: int) -> LieAlgebra:
    """Heisenberg algebra of dimension ``2m + 1``: ``[e_i, e_{m+i}] = e_n``."""
    if n < 3 or n % 2 == 0:
        raise ValueError("heisenberg algebras have odd dimension n = 2m + 1 >= 3")
    m = (n - 1) // 2
    return LieAlgebra(n, {(i, m + i): {n: 1} for i in range(1, m + 1)})


def filiform_model(n: int) -> LieAlgebra:
    """The model filiform algebra L_n: ``[e_1, e_i] = e_{i+1}`` for ``2 <= i < n``."""
    if n < 3:
        raise ValueError("filiform-model needs n >= 3")
    return LieAlgebra(n, {(1, i): {i + 1: 1} for i in range(2, n)})


_STANDARD = {
    "abelian": abelian,
    "heisenberg": heisenberg,
    "filiform-model": filiform_model,
}


def standard(name: str, n: int) -> LieAlgebra:
    try:
        build = _STANDARD[name]
    except KeyError:
        raise ValueError(f"unknown standard algebra {name!r}; choose from {', '.join(_STANDARD)}") from None
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return build(n)
