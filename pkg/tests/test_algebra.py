import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from liekit.algebra import (
    LieAlgebra,
    NotAnIdealError,
    ad,
    center,
    change_basis,
    check_jacobi,
    invariants,
    is_ideal,
    is_nilpotent,
    lower_central_series,
    quotient,
)
from liekit.families import abelian, filiform_model, heisenberg, standard
from liekit.gab import gab
from liekit.linalg import Matrix, Subspace, unit_vector


def sl2():
    # [h, x] = 2x, [h, y] = -2y, [x, y] = h with basis (h, x, y)
    return LieAlgebra(3, {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}}, labels=["h", "x", "y"])


def test_bracket_is_antisymmetric_and_bilinear():
    h = heisenberg(3)
    assert h.bracket((1, 0, 0), (0, 1, 0)) == (0, 0, 1)
    assert h.bracket((0, 1, 0), (1, 0, 0)) == (0, 0, -1)
    assert h.bracket((2, 1, 0), (1, 3, 0)) == (0, 0, 5)
    assert h.structure_constant(2, 1, 3) == -1


def test_invalid_tables_rejected():
    with pytest.raises(ValueError):
        LieAlgebra(3, {(2, 1): {3: 1}})
    with pytest.raises((ValueError, IndexError)):
        LieAlgebra(3, {(1, 2): {4: 1}})


def test_zero_constants_pruned():
    assert LieAlgebra(3, {(1, 2): {3: 0}}).is_abelian()


def test_heisenberg_invariants():
    h = heisenberg(3)
    assert check_jacobi(h) is None
    assert center(h) == Subspace.span([(0, 0, 1)], 3)
    inv = invariants(h)
    assert inv.lcs_dims == (3, 1, 0)
    assert inv.nilpotency_index == 2
    # dimension 3 with nilpotency index 2 counts as filiform
    assert inv.filiform
    assert not invariants(heisenberg(5)).filiform


def test_tampered_bracket_violates_jacobi():
    # [e2, e3] = e5 + alpha e6 with the e6 term dropped, at (1, 0)
    table = dict(gab(1, 0).table)
    table[(2, 3)] = {5: 1}
    g = LieAlgebra(11, table)
    expected = oracles.first_jacobi_violation(oracles.tensor(11, g.table))
    v = check_jacobi(g)
    assert v is not None
    assert (v.i, v.j, v.k) == expected == (1, 2, 3)
    assert {2, 3} <= {v.i, v.j, v.k}


def test_jacobi_on_non_lie_bracket():
    # [e1, e2] = e3, [e1, e3] = e1 is not a Lie bracket
    g = LieAlgebra(3, {(1, 2): {3: 1}, (1, 3): {1: 1}})
    assert check_jacobi(g) is not None
    assert (check_jacobi(g).i, check_jacobi(g).j, check_jacobi(g).k) == oracles.first_jacobi_violation(
        oracles.tensor(3, g.table))


def test_sl2_is_not_nilpotent():
    g = sl2()
    assert check_jacobi(g) is None
    assert center(g).is_zero()
    assert not is_nilpotent(g)
    inv = invariants(g)
    assert inv.lcs_dims == (3,)
    assert inv.nilpotency_index is None and not inv.filiform


@pytest.mark.parametrize("n", [3, 4, 6, 9])
def test_filiform_model(n):
    inv = invariants(filiform_model(n))
    assert inv.filiform
    assert inv.lcs_dims == (n,) + tuple(range(n - 2, -1, -1))
    assert inv.nilpotency_index == n - 1


def test_abelian():
    inv = invariants(abelian(4))
    assert inv.center_dim == 4 and inv.lcs_dims == (4, 0) and inv.nilpotency_index == 1
    assert invariants(abelian(0)).lcs_dims == (0,)


def test_standard_names():
    assert standard("heisenberg", 5) == heisenberg(5)
    with pytest.raises(ValueError):
        standard("nope", 3)
    with pytest.raises(ValueError):
        heisenberg(4)


def test_ad_columns():
    h = heisenberg(3)
    assert ad(h, (1, 0, 0)) == Matrix([[0, 0, 0], [0, 0, 0], [0, 1, 0]])


def test_quotient_by_center():
    g = gab(1, 0)
    q, proj = quotient(g, center(g))
    assert q.dim == 10
    assert proj.shape == (10, 11)
    assert q.labels == tuple(f"e{i}" for i in range(1, 11))
    assert check_jacobi(q) is None
    # projection is a homomorphism
    for i in range(11):
        for j in range(i + 1, 11):
            lhs = proj @ g.basis_bracket(i, j)
            rhs = q.bracket(proj.column(i), proj.column(j))
            assert lhs == rhs


def test_quotient_requires_ideal():
    h = heisenberg(3)
    s = Subspace.span([(1, 0, 0)], 3)
    assert not is_ideal(h, s)
    with pytest.raises(NotAnIdealError):
        quotient(h, s)


def test_change_basis_rebased_heisenberg():
    h = heisenberg(3)
    # X, Y, X + Z
    r = change_basis(h, [(1, 0, 0), (0, 1, 0), (1, 0, 1)])
    assert r.table == {(1, 2): ((1, F(-1)), (3, F(1))), (2, 3): ((1, F(1)), (3, F(-1)))}
    assert check_jacobi(r) is None
    assert invariants(r).lcs_dims == (3, 1, 0)


# ---- properties


def _random_invertible(rnd, n):
    while True:
        m = Matrix([[rnd.randint(-2, 2) for _ in range(n)] for _ in range(n)])
        if m.rank() == n:
            return m


ALGEBRAS = [heisenberg(3), heisenberg(5), filiform_model(5), sl2(), gab(1, 0), abelian(3)]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(range(len(ALGEBRAS))), st.integers(0, 10**6))
def test_invariants_stable_under_change_of_basis(idx, seed):
    g = ALGEBRAS[idx]
    rnd = random.Random(seed)
    m = _random_invertible(rnd, g.dim)
    r = change_basis(g, m.columns())
    assert check_jacobi(r) is None
    assert invariants(r).lcs_dims == invariants(g).lcs_dims
    assert center(r).dim == center(g).dim
    assert center(r).dim == oracles.center_dim(oracles.tensor(r.dim, r.table))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(range(len(ALGEBRAS))), st.integers(0, 10**6))
def test_center_commutes_with_everything(idx, seed):
    g = ALGEBRAS[idx]
    rnd = random.Random(seed)
    z = center(g)
    y = [rnd.randint(-3, 3) for _ in range(g.dim)]
    for v in z.basis:
        assert not any(g.bracket(v, y))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(range(len(ALGEBRAS))), st.integers(0, 10**6))
def test_bracket_matches_dense_oracle(idx, seed):
    g = ALGEBRAS[idx]
    rnd = random.Random(seed)
    x = [F(rnd.randint(-3, 3), rnd.randint(1, 3)) for _ in range(g.dim)]
    y = [F(rnd.randint(-3, 3), rnd.randint(1, 3)) for _ in range(g.dim)]
    c = oracles.tensor(g.dim, g.table)
    assert list(g.bracket(x, y)) == oracles.bracket(c, x, y)


def test_lower_central_series_terms_are_ideals():
    g = gab(1, 0)
    for s in lower_central_series(g):
        assert is_ideal(g, s)
    assert lower_central_series(g)[-2] == Subspace.span([unit_vector(11, 10)], 11)
