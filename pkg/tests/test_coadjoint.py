import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from liekit.algebra import center
from liekit.coadjoint import IndexEstimate, bform, dual_basis, flat_orbit, generic_index, radical
from liekit.families import abelian, filiform_model, heisenberg
from liekit.gab import gab
from liekit.linalg import DimensionError, Subspace, unit_vector


def test_bform_is_skew():
    g = gab(1, 0)
    b = bform(g, dual_basis(11, 11))
    assert b.transpose() == -b
    # l([e5, e6]) = 10
    assert b[4, 5] == 10


def test_heisenberg_radicals():
    h = heisenberg(3)
    assert radical(h, (0, 0, 1)) == Subspace.span([(0, 0, 1)], 3)
    assert radical(h, (1, 0, 0)).is_full()
    assert flat_orbit(h, (0, 0, 1))
    assert not flat_orbit(h, (1, 2, 0))


def test_gab_e11_radical_is_center():
    e11 = Subspace.span([unit_vector(11, 10)], 11)
    for point in [(1, 0), (0, 0), (1, -3), (-2, 6)]:
        g = gab(*point)
        assert radical(g, dual_basis(11, 11)) == e11 == center(g)
        assert flat_orbit(g, dual_basis(11, 11))


def test_dual_basis_bounds():
    with pytest.raises(IndexError):
        dual_basis(3, 4)
    with pytest.raises(DimensionError):
        radical(heisenberg(3), (1, 2))


def test_generic_index_values():
    assert generic_index(gab(1, 0), 100, 0).min_radical_dim == 1
    assert generic_index(heisenberg(3), 100, 0).min_radical_dim == 1
    assert generic_index(abelian(5), 10, 0).min_radical_dim == 5
    assert generic_index(filiform_model(4), 50, 0).min_radical_dim == 2


def test_generic_index_is_seeded():
    a = generic_index(filiform_model(5), 20, 7)
    b = generic_index(filiform_model(5), 20, 7)
    assert a == b
    assert a.as_dict()["kind"] == "sampled upper bound"
    assert a.as_dict()["seed"] == 7
    assert isinstance(a, IndexEstimate)
    with pytest.raises(ValueError):
        generic_index(heisenberg(3), 0, 0)


ALGEBRAS = [gab(1, 0), gab(0, 0), heisenberg(5), filiform_model(7), filiform_model(6)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(range(len(ALGEBRAS))), st.integers(0, 10**6))
def test_orbit_dimension_is_even(idx, seed):
    g = ALGEBRAS[idx]
    rnd = random.Random(seed)
    ell = [rnd.randint(-10, 10) for _ in range(g.dim)]
    rad = radical(g, ell)
    assert rad.codim % 2 == 0
    assert rad.dim == oracles.radical_dim(oracles.tensor(g.dim, g.table), ell)
    assert center(g) <= rad


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(range(len(ALGEBRAS))), st.integers(0, 10**6))
def test_radical_vectors_kill_the_form(idx, seed):
    g = ALGEBRAS[idx]
    rnd = random.Random(seed)
    ell = [rnd.randint(-10, 10) for _ in range(g.dim)]
    b = bform(g, ell)
    for v in radical(g, ell).basis:
        assert not any(b @ v)
