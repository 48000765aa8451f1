"""Multivariate polynomials with rational coefficients in named parameters.

These are the coefficients of parametric structure-constant tables. Only
ring operations are supported (no division by parameters).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .linalg import ZERO, to_scalar

# A monomial is a sorted tuple of (name, exponent) pairs with exponent >= 1;
# the empty tuple is the constant monomial.


def _mul_monomials(a: tuple, b: tuple) -> tuple:
    exps = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


class Polynomial:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping = None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = to_scalar(c)
            if c:
                mono = tuple(sorted((n, int(e)) for n, e in mono if e))
                if any(e < 0 for _, e in mono):
                    raise ValueError("negative exponent in polynomial")
                clean[mono] = clean.get(mono, ZERO) + c
        self._terms = {m: c for m, c in sorted(clean.items(), key=lambda t: _order_key(t[0])) if c}

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls({(): c})

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        return cls({((name, 1),): 1})

    @classmethod
    def coerce(cls, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        return cls.constant(value)

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def variables(self) -> frozenset:
        return frozenset(n for m in self._terms for n, _ in m)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((), ZERO)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        try:
            return self == Polynomial.constant(other)
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __add__(self, other) -> "Polynomial":
        other = Polynomial.coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, ZERO) + c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial.coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = Polynomial.coerce(other)
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mul_monomials(m1, m2)
                out[m] = out.get(m, ZERO) + c1 * c2
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Polynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, assignment: Mapping) -> Fraction:
        """Exact value at ``assignment`` (name -> rational); every variable must be bound."""
        missing = self.variables() - set(assignment)
        if missing:
            raise KeyError(f"no value for parameter(s) {', '.join(sorted(missing))}")
        values = {n: to_scalar(v) for n, v in assignment.items()}
        total = ZERO
        for mono, c in self._terms.items():
            term = c
            for name, e in mono:
                term *= values[name] ** e
            total += term
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self._terms.items():
            mag = abs(c)
            factors = [n if e == 1 else f"{n}^{e}" for n, e in mono]
            if factors:
                body = "*".join(factors) if mag == 1 else f"{mag}*" + "*".join(factors)
            else:
                body = str(mag)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(("+ " if c > 0 else "- ") + body)
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def _order_key(mono: tuple):
    # by total degree, then lexicographically with higher powers first
    return (sum(e for _, e in mono), tuple((n, -e) for n, e in mono))
