"""Exact linear algebra over the rationals.

Everything here works on :class:`fractions.Fraction` entries. There is no
floating point anywhere: row reduction, kernels, linear solves and the
strict-inequality feasibility test are all exact.

Vectors are plain tuples of ``Fraction``. Matrices are immutable
:class:`Matrix` values. Subspaces are stored in reduced row-echelon form so
that two :class:`Subspace` objects compare equal exactly when they span the
same space.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Optional, Sequence

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionError(ValueError):
    """Raised when operands have incompatible shapes."""


def to_scalar(value) -> Fraction:
    """Convert ``value`` to an exact rational.

    Accepts ints, ``Fraction`` (or any ``numbers.Rational``) and strings such
    as ``"3/4"``. Floats are rejected so that rounding cannot sneak in.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def vector(values: Iterable) -> Vector:
    return tuple(to_scalar(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    """Standard basis vector with a 1 at 0-based position ``i``."""
    if not 0 <= i < n:
        raise IndexError(f"index {i} out of range for dimension {n}")
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v) if a and b), ZERO)


def add_vectors(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    if len(u) != len(v):
        raise DimensionError(f"length mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def scale_vector(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return not any(v)


def primitive_integer_vector(v: Sequence[Fraction]) -> tuple:
    """Scale ``v`` by a positive rational to the primitive integer vector.

    Denominators are cleared and the gcd of the numerators is divided out.
    The sign is preserved, so strict inequalities keep their direction.
    """
    denom = 1
    for a in v:
        denom = lcm(denom, Fraction(a).denominator)
    ints = [int(a * denom) for a in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)


class Matrix:
    """An immutable dense matrix of exact rationals.

    Shape is fixed at construction and every index access is bounds-checked
    (negative indices are rejected rather than wrapped).
    """

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: Optional[int] = None):
        data = tuple(vector(r) for r in rows)
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise DimensionError("ragged rows")
            if ncols is not None and ncols != width:
                raise DimensionError(f"expected {ncols} columns, got {width}")
        else:
            width = 0 if ncols is None else ncols
        self._rows = data
        self.nrows = len(data)
        self.ncols = width

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[ZERO] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([unit_vector(n, i) for i in range(n)], ncols=n)

    @classmethod
    def diag(cls, entries: Iterable) -> "Matrix":
        d = vector(entries)
        n = len(d)
        return cls([[d[i] if i == j else ZERO for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: Optional[int] = None) -> "Matrix":
        cols = [vector(c) for c in columns]
        if not cols:
            return cls([() for _ in range(nrows or 0)], ncols=0)
        return cls(zip(*cols), ncols=len(cols))

    @classmethod
    def from_vec(cls, v: Sequence, n: int) -> "Matrix":
        """Inverse of :meth:`vec` for an ``n`` x ``n`` matrix (column-major)."""
        if len(v) != n * n:
            raise DimensionError(f"vector of length {len(v)} is not {n}x{n}")
        return cls([[v[c * n + r] for c in range(n)] for r in range(n)], ncols=n)

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Matrix":
        """The matrix unit with a single 1 at 0-based position ``(i, j)``."""
        rows = [[ZERO] * n for _ in range(n)]
        rows[i][j] = ONE
        return cls(rows, ncols=n)

    @classmethod
    def vstack(cls, blocks: Sequence["Matrix"], ncols: int) -> "Matrix":
        rows = []
        for b in blocks:
            if b.ncols != ncols:
                raise DimensionError("column mismatch in vstack")
            rows.extend(b._rows)
        return cls(rows, ncols=ncols)

    @property
    def shape(self) -> tuple:
        return (self.nrows, self.ncols)

    @property
    def rows(self) -> tuple:
        return self._rows

    def _check(self, i: int, j: int) -> None:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"entry ({i}, {j}) outside {self.nrows}x{self.ncols} matrix")

    def __getitem__(self, key) -> Fraction:
        i, j = key
        self._check(i, j)
        return self._rows[i][j]

    def row(self, i: int) -> Vector:
        if not 0 <= i < self.nrows:
            raise IndexError(f"row {i} out of range")
        return self._rows[i]

    def column(self, j: int) -> Vector:
        if not 0 <= j < self.ncols:
            raise IndexError(f"column {j} out of range")
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list:
        return [self.column(j) for j in range(self.ncols)]

    def replace(self, i: int, j: int, value) -> "Matrix":
        self._check(i, j)
        rows = [list(r) for r in self._rows]
        rows[i][j] = to_scalar(value)
        return Matrix(rows, ncols=self.ncols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.shape, self._rows))

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(a) for a in r) + "]" for r in self._rows)
        return f"Matrix([{body}])"

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix((add_vectors(a, b) for a, b in zip(self._rows, other._rows)), ncols=self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(
            (tuple(x - y for x, y in zip(a, b)) for a, b in zip(self._rows, other._rows)),
            ncols=self.ncols,
        )

    def __neg__(self) -> "Matrix":
        return Matrix((tuple(-x for x in r) for r in self._rows), ncols=self.ncols)

    def __mul__(self, c) -> "Matrix":
        c = to_scalar(c)
        return Matrix((scale_vector(c, r) for r in self._rows), ncols=self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            out = []
            orows = other._rows
            for r in self._rows:
                acc = [ZERO] * other.ncols
                for k, a in enumerate(r):
                    if a:
                        for j, b in enumerate(orows[k]):
                            if b:
                                acc[j] += a * b
                out.append(acc)
            return Matrix(out, ncols=other.ncols)
        v = vector(other)
        if len(v) != self.ncols:
            raise DimensionError(f"cannot apply {self.shape} matrix to vector of length {len(v)}")
        return tuple(dot(r, v) for r in self._rows)

    def __pow__(self, k: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise DimensionError("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative matrix power")
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> "Matrix":
        return Matrix(zip(*self._rows), ncols=self.nrows) if self.nrows else Matrix([], ncols=0)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def vec(self) -> Vector:
        """Column-major vectorization."""
        return tuple(self._rows[r][c] for c in range(self.ncols) for r in range(self.nrows))

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_diagonal(self) -> bool:
        return all(not a or i == j for i, r in enumerate(self._rows) for j, a in enumerate(r))

    def diagonal(self) -> Vector:
        return tuple(self._rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def is_strictly_lower_triangular(self) -> bool:
        return all(not a or i > j for i, r in enumerate(self._rows) for j, a in enumerate(r))

    def rank(self) -> int:
        return len(_gauss_jordan(_sparse_rows(self._rows), self.ncols))


# --- sparse Gauss-Jordan core ----------------------------------------------

def _bits(x: Fraction) -> int:
    return x.numerator.bit_length() + x.denominator.bit_length()


def _sparse_rows(rows: Iterable[Sequence[Fraction]]) -> list:
    return [{j: a for j, a in enumerate(r) if a} for r in rows]


def _gauss_jordan(rows: list, ncols: int) -> list:
    """Reduce sparse rows (dicts col -> nonzero Fraction) to RREF.

    Returns ``[(pivot_col, row_dict), ...]`` sorted by pivot column, each row
    normalised to a leading 1 with zeros in every other pivot column. Among
    the rows eligible to supply a pivot, the one whose pivot entry has the
    smallest bit length (ties: fewest nonzeros) is chosen.
    """
    active = [dict(r) for r in rows if r]
    done: list = []
    for col in range(ncols):
        if not active:
            break
        best = None
        best_key = None
        for idx, r in enumerate(active):
            a = r.get(col)
            if a is not None:
                key = (_bits(a), len(r))
                if best_key is None or key < best_key:
                    best, best_key = idx, key
        if best is None:
            continue
        prow = active.pop(best)
        inv = 1 / prow[col]
        if inv != 1:
            prow = {c: a * inv for c, a in prow.items()}
        survivors = []
        for r in active:
            f = r.get(col)
            if f is not None:
                _axpy(r, -f, prow)
            if r:
                survivors.append(r)
        active = survivors
        for _, r in done:
            f = r.get(col)
            if f is not None:
                _axpy(r, -f, prow)
        done.append((col, prow))
    return done


def _axpy(target: dict, f: Fraction, src: dict) -> None:
    """In place: ``target += f * src`` dropping entries that cancel."""
    for c, a in src.items():
        v = target.get(c, ZERO) + f * a
        if v:
            target[c] = v
        else:
            target.pop(c, None)


def _dense(row: dict, ncols: int) -> Vector:
    out = [ZERO] * ncols
    for c, a in row.items():
        out[c] = a
    return tuple(out)


def _null_space(reduced: list, ncols: int) -> list:
    pivots = [p for p, _ in reduced]
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for p, r in reduced:
            a = r.get(f)
            if a is not None:
                v[p] = -a
        basis.append(tuple(v))
    return basis


# --- public operations -----------------------------------------------------

def rref(m: Matrix) -> tuple:
    """Reduced row-echelon form of ``m``.

    Returns ``(reduced, pivots, rank)`` where ``reduced`` has the same shape as
    ``m`` (zero rows at the bottom) and ``pivots`` are 0-based column indices.
    """
    reduced = _gauss_jordan(_sparse_rows(m.rows), m.ncols)
    pivots = tuple(p for p, _ in reduced)
    rows = [_dense(r, m.ncols) for _, r in reduced]
    rows.extend([zero_vector(m.ncols)] * (m.nrows - len(rows)))
    return Matrix(rows, ncols=m.ncols), pivots, len(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of ``Q^ambient_dim`` held by its canonical RREF basis.

    Construct with :meth:`span`; the dataclass equality is then subspace
    equality.
    """

    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vs = [vector(v) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        return cls._from_sparse(_sparse_rows(vs), ambient_dim)

    @classmethod
    def _from_sparse(cls, rows: list, ambient_dim: int) -> "Subspace":
        reduced = _gauss_jordan(rows, ambient_dim)
        return cls(
            ambient_dim,
            tuple(_dense(r, ambient_dim) for _, r in reduced),
            tuple(p for p, _ in reduced),
        )

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(
            ambient_dim,
            tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)),
            tuple(range(ambient_dim)),
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence) -> Vector:
        """Subtract from ``v`` the combination of basis rows clearing every pivot coordinate."""
        out = list(vector(v))
        if len(out) != self.ambient_dim:
            raise DimensionError(f"vector of length {len(out)} in ambient dimension {self.ambient_dim}")
        for p, row in zip(self.pivots, self.basis):
            f = out[p]
            if f:
                for j, a in enumerate(row):
                    if a:
                        out[j] -= f * a
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return is_zero_vector(self.reduce(v))

    __contains__ = contains

    def issubset(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("subspaces live in different ambient spaces")
        return all(other.contains(b) for b in self.basis)

    __le__ = issubset

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError("subspaces live in different ambient spaces")
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def complement_indices(self) -> tuple:
        """Non-pivot coordinates; their unit vectors span a complement."""
        ps = set(self.pivots)
        return tuple(i for i in range(self.ambient_dim) if i not in ps)

    def coordinates(self, v: Sequence) -> Optional[Vector]:
        """Coefficients of ``v`` in the stored basis, or None if ``v`` is outside."""
        v = vector(v)
        if not self.contains(v):
            return None
        return tuple(v[p] for p in self.pivots)

    def as_matrix(self) -> Matrix:
        return Matrix(self.basis, ncols=self.ambient_dim)

    def describe(self, labels: Optional[Sequence[str]] = None) -> str:
        labels = labels or [f"e{i + 1}" for i in range(self.ambient_dim)]
        return "span{" + ", ".join(format_combination(b, labels) for b in self.basis) + "}"


def format_combination(v: Sequence[Fraction], labels: Sequence[str]) -> str:
    """Render a coordinate vector as e.g. ``e5 + e6`` or ``2*e3 - 1/2*e5``."""
    parts = []
    for a, name in zip(v, labels):
        if not a:
            continue
        mag = abs(a)
        term = name if mag == 1 else f"{mag}*{name}"
        if not parts:
            parts.append(term if a > 0 else f"-{term}")
        else:
            parts.append(("+ " if a > 0 else "- ") + term)
    return " ".join(parts) if parts else "0"


def kernel_basis(m: Matrix) -> Subspace:
    """The null space ``{v : m v = 0}`` as a canonical subspace."""
    return null_space_of_rows(_sparse_rows(m.rows), m.ncols)


def null_space_of_rows(rows: list, ncols: int) -> Subspace:
    """Null space of a system given as sparse rows (dicts col -> Fraction).

    Large structured systems (the derivation equations) are assembled
    directly in this form to avoid densifying them.
    """
    reduced = _gauss_jordan(rows, ncols)
    return Subspace._from_sparse(_sparse_rows(_null_space(reduced, ncols)), ncols)


def solve(m: Matrix, b: Sequence) -> Optional[Vector]:
    """Some ``x`` with ``m x = b``, or None when the system is inconsistent.

    Free variables are set to zero.
    """
    b = vector(b)
    if len(b) != m.nrows:
        raise DimensionError(f"right-hand side has {len(b)} entries, matrix has {m.nrows} rows")
    n = m.ncols
    rows = []
    for r, rhs in zip(m.rows, b):
        d = {j: a for j, a in enumerate(r) if a}
        if rhs:
            d[n] = rhs
        rows.append(d)
    reduced = _gauss_jordan(rows, n + 1)
    x = [ZERO] * n
    for p, r in reduced:
        if p == n:
            return None
        x[p] = r.get(n, ZERO)
    return tuple(x)


# --- strict feasibility ------------------------------------------------------

def fourier_motzkin_point(inequalities: Iterable[tuple], nvars: int) -> Optional[Vector]:
    """Find ``t`` with ``a . t + c > 0`` for every ``(a, c)``, or None.

    Plain Fourier-Motzkin elimination on strict inequalities followed by
    back substitution. Each eliminated variable is set to the smallest
    integer above its lower bounds when the interval allows it (similarly
    for upper bounds only), otherwise to the interval midpoint.
    """
    system = _normalise_system(inequalities, nvars)
    if system is None:
        return None
    stages = [system]
    for var in range(nvars - 1, -1, -1):
        current = stages[-1]
        lower, upper, rest = [], [], []
        for a, c in current:
            (lower if a[var] > 0 else upper if a[var] < 0 else rest).append((a, c))
        combined = list(rest)
        for la, lc in lower:
            for ua, uc in upper:
                # positive combination that cancels ``var``
                f, g = -ua[var], la[var]
                combined.append(
                    (tuple(f * x + g * y for x, y in zip(la, ua)), f * lc + g * uc)
                )
        reduced = _normalise_system(combined, nvars)
        if reduced is None:
            return None
        stages.append(reduced)
    point = [ZERO] * nvars
    for var in range(nvars):
        # stages[nvars - var] still mentions t_0..t_var; later ones are fixed to 0
        constraints = stages[nvars - var - 1]
        lo, hi = None, None
        for a, c in constraints:
            coef = a[var]
            if not coef:
                continue
            rest = c + sum((x * y for x, y in zip(a[:var], point[:var])), ZERO)
            bound = -rest / coef
            if coef > 0:
                lo = bound if lo is None or bound > lo else lo
            else:
                hi = bound if hi is None or bound < hi else hi
        point[var] = _pick_between(lo, hi)
    return tuple(point)


def _pick_between(lo: Optional[Fraction], hi: Optional[Fraction]) -> Fraction:
    if lo is None and hi is None:
        return ZERO
    if hi is None:
        return Fraction(lo.numerator // lo.denominator + 1)
    if lo is None:
        return Fraction(-((-hi.numerator) // hi.denominator) - 1)
    candidate = Fraction(lo.numerator // lo.denominator + 1)
    if candidate < hi:
        return candidate
    return (lo + hi) / 2


def _normalise_system(inequalities: Iterable[tuple], nvars: int) -> Optional[list]:
    """Scale each inequality to primitive integers, dedupe, drop tautologies.

    Returns None if some inequality has no variables and fails (``c <= 0``).
    """
    seen = set()
    out = []
    for a, c in inequalities:
        a = vector(a)
        c = to_scalar(c)
        if len(a) != nvars:
            raise DimensionError(f"inequality with {len(a)} coefficients, expected {nvars}")
        if is_zero_vector(a):
            if c > 0:
                continue
            return None
        prim = primitive_integer_vector(a + (c,))
        if prim in seen:
            continue
        seen.add(prim)
        out.append((tuple(Fraction(x) for x in prim[:-1]), Fraction(prim[-1])))
    return out


def strict_positive_point(equalities: Matrix, dim: int) -> Optional[Vector]:
    """A vector ``x`` with ``equalities @ x == 0`` and every ``x_i > 0``.

    The kernel of ``equalities`` is parametrised by its canonical basis and
    positivity of each coordinate becomes a strict inequality in the
    parameters, which Fourier-Motzkin elimination then decides.
    """
    if equalities.nrows and equalities.ncols != dim:
        raise DimensionError(f"equalities have {equalities.ncols} columns, expected {dim}")
    if dim == 0:
        return ()
    kernel = kernel_basis(equalities) if equalities.nrows else Subspace.full(dim)
    k = kernel.dim
    if k == 0:
        return None
    # coordinate i of sum_r t_r * basis_r is sum_r t_r * basis_r[i]
    ineqs = [(tuple(b[i] for b in kernel.basis), ZERO) for i in range(dim)]
    t = fourier_motzkin_point(ineqs, k)
    if t is None:
        return None
    x = [ZERO] * dim
    for coeff, b in zip(t, kernel.basis):
        if coeff:
            for i, a in enumerate(b):
                x[i] += coeff * a
    return tuple(x)
