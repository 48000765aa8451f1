import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from liekit.algebra import LieAlgebra, ad
from liekit.derivations import (
    MatrixSpace,
    characteristic_nilpotency,
    derivation_equations,
    derivation_space,
    diagonal_derivation_space,
    engel_all_nilpotent,
    is_characteristically_nilpotent,
    is_derivation,
)
from liekit.families import abelian, filiform_model, heisenberg
from liekit.gab import gab, gab_quotient
from liekit.linalg import Matrix

SL2 = LieAlgebra(3, {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}})


@pytest.mark.parametrize("g, expected", [
    (abelian(3), 9),
    (heisenberg(3), 6),
    (heisenberg(5), 15),  # sp(4) + scaling + inner
    (filiform_model(5), 9),
    (SL2, 3),
])
def test_small_derivation_dimensions(g, expected):
    assert derivation_space(g).dim == expected
    assert oracles.derivation_dim(oracles.tensor(g.dim, g.table)) == expected


def test_equation_count_for_gab():
    # at most one equation per pair i < j and output coordinate k; zero rows dropped
    g = gab(1, 0)
    rows = derivation_equations(g)
    assert len(rows) == 433
    assert len(rows) == len(oracles.derivation_rows(oracles.tensor(11, g.table)))


@pytest.mark.parametrize("point, expected", [((1, 0), 13), ((1, -3), 13), ((0, 0), 14)])
def test_gab_derivation_dimension_matches_oracle(point, expected):
    g = gab(*point)
    assert derivation_space(g).dim == expected
    assert oracles.derivation_dim(oracles.tensor(11, g.table)) == expected


def test_basis_elements_are_derivations():
    g = gab(F(1, 2), 2)
    c = oracles.tensor(11, g.table)
    for d in derivation_space(g).basis:
        assert is_derivation(g, d)
        assert oracles.is_derivation(c, [list(r) for r in d.rows])


def test_identity_is_not_a_derivation_of_heisenberg():
    assert not is_derivation(heisenberg(3), Matrix.identity(3))
    assert is_derivation(heisenberg(3), Matrix.diag([1, 1, 2]))


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["h5", "f6", "g10", "sl2"]), st.integers(0, 10**6))
def test_inner_derivations(name, seed):
    g = {"h5": heisenberg(5), "f6": filiform_model(6), "g10": gab(1, 0), "sl2": SL2}[name]
    rnd = random.Random(seed)
    x = [rnd.randint(-3, 3) for _ in range(g.dim)]
    assert is_derivation(g, ad(g, x))
    assert derivation_space(g).contains(ad(g, x))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 10**6))
def test_commutator_of_derivations(seed):
    g = heisenberg(5)
    space = derivation_space(g)
    rnd = random.Random(seed)
    d1 = space.random_element(rnd)
    d2 = space.random_element(rnd)
    assert is_derivation(g, d1.commutator(d2))


def test_characteristic_nilpotency_verdicts():
    v = characteristic_nilpotency(gab(1, 0))
    assert v.all_nilpotent
    assert v.flag_dims[-1] == 11
    assert not is_characteristically_nilpotent(heisenberg(3))
    w = characteristic_nilpotency(heisenberg(3))
    assert w.witness is not None
    assert not (w.witness ** 3).is_zero()


def test_quotient_at_origin_has_invertible_derivation():
    q = gab_quotient(0, 0)
    space = derivation_space(q)
    assert space.dim == 13
    assert space.contains(Matrix.diag(range(1, 11)))
    v = engel_all_nilpotent(space)
    assert not v.all_nilpotent
    assert v.witness is not None


def test_diagonal_derivations():
    assert diagonal_derivation_space(heisenberg(3)).dim == 2
    assert diagonal_derivation_space(gab(1, 0)).is_zero()
    assert diagonal_derivation_space(gab(0, 0)).dim == 1


def test_engel_requires_closed_space():
    m = Matrix.unit(3, 1, 0)
    with pytest.raises(ValueError):
        engel_all_nilpotent(MatrixSpace(3, (m,), False))


def test_engel_on_non_closed_span_detects_after_closure():
    # E21 and E12 are nilpotent but their span is not closed; the closure is sl2
    a, b = Matrix.unit(2, 1, 0), Matrix.unit(2, 0, 1)
    assert not MatrixSpace.from_matrices([a, b], 2).bracket_closed
    closure = MatrixSpace.lie_closure([a, b], 2)
    assert closure.dim == 3
    assert not engel_all_nilpotent(closure).all_nilpotent


def _random_lower(rnd, n):
    return Matrix([[rnd.randint(-2, 2) if c < r else 0 for c in range(n)] for r in range(n)])


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6))
def test_engel_agrees_with_power_check(seed):
    rnd = random.Random(seed)
    n = 4
    space = MatrixSpace.lie_closure([_random_lower(rnd, n) for _ in range(2)], n)
    assert engel_all_nilpotent(space).all_nilpotent
    for _ in range(10):
        assert oracles.is_nilpotent_matrix([list(r) for r in space.random_element(rnd).rows])
    diag = Matrix.diag([rnd.randint(-2, 2) for _ in range(n)])
    if not diag.is_zero():
        bigger = MatrixSpace.lie_closure(list(space.basis) + [diag], n)
        assert not engel_all_nilpotent(bigger).all_nilpotent
