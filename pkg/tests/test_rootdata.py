from fractions import Fraction

import pytest

from torofock.rootdata import (
    AlgebraShape,
    LatticeA,
    LatticeJ,
    LatticeQ,
    pair,
    simple_root_A,
    simple_root_Q,
    unit_J,
)

F = Fraction


@pytest.fixture(scope="module")
def shape():
    return AlgebraShape(3, 2)


def test_shape_validation():
    with pytest.raises(ValueError):
        AlgebraShape(2, 2)
    with pytest.raises(ValueError):
        AlgebraShape(3, 1)


def test_d_vector(shape):
    assert [shape.d_coeff(i) for i in shape.nodes] == [1, F(1, 2), F(1, 2), 1]
    with pytest.raises(IndexError):
        shape.d_coeff(4)


def test_gram_entries(shape):
    n = shape.n
    assert shape.gram(1, 1) == 1
    assert shape.gram(n, n) == 2
    assert shape.gram(0, 0) == 2
    assert shape.gram(0, 1) == -1
    assert shape.gram(0, n) == 0
    assert shape.gram(1, 2) == -F(1, 2)
    assert shape.gram(n - 1, n) == -1


def test_cartan_entries(shape):
    n = shape.n
    assert shape.cartan(0, 1) == -1 == shape.cartan(n, n - 1)
    assert shape.cartan(1, 0) == -2 == shape.cartan(n - 1, n)
    assert all(shape.cartan(i, i) == 2 for i in shape.nodes)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_symmetrization_and_sign(n):
    shape = AlgebraShape(n, 2)
    for i in shape.nodes:
        for j in shape.nodes:
            assert shape.d_coeff(i) * shape.cartan(i, j) == shape.gram(i, j)
            assert shape.gram(i, j) == shape.d_coeff(j) * shape.cartan(j, i)
            if i != j:
                assert shape.cartan(i, j) <= 0
                assert (shape.cartan(i, j) == 0) == (shape.cartan(j, i) == 0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_null_root_in_radical(n):
    shape = AlgebraShape(n, 2)
    delta = shape.null_root_coords()
    for i in shape.nodes:
        assert shape.pair_Q_node(i, delta) == 0
    assert shape.pair_Q(delta, delta) == 0


def test_gram_short_matches_gram(shape):
    for i in shape.short_nodes:
        for j in shape.short_nodes:
            assert shape.gram_short(i, j) == shape.gram(i, j)
    assert shape.gram_short(1, 1) == 1
    assert shape.gram_short(1, 2) == -F(1, 2)
    shape45 = AlgebraShape(5, 2)
    assert shape45.gram_short(1, 3) == 0


def test_gram_J():
    shape = AlgebraShape(3, 3)
    assert shape.gram_J(1, 1) == 0
    assert shape.gram_J(1, 2) == -1
    assert shape.gram_J(2, 1) == -1
    with pytest.raises(IndexError):
        shape.gram_J(0, 1)


def test_pairings(shape):
    a1 = simple_root_Q(shape, 1)
    a2 = simple_root_Q(shape, 2)
    assert pair(shape, a1, a1 + a2) == F(1, 2)
    zero = LatticeQ((0,) * (shape.n + 1))
    assert pair(shape, zero, a1 + a2) == 0

    t1 = simple_root_A(shape, 1)
    t2 = simple_root_A(shape, 2)
    assert pair(shape, t1, t2) == -F(1, 2)
    assert pair(shape, t1, t1) == 1

    shape3 = AlgebraShape(3, 3)
    e1, e2 = unit_J(shape3, 1), unit_J(shape3, 2)
    assert pair(shape3, e1, e2) == -1
    assert pair(shape3, e1, e1) == 0

    with pytest.raises(TypeError):
        pair(shape, a1, t1)


def test_pair_node_helpers():
    shape = AlgebraShape(4, 3)
    lam = (0, 1, 1, 0, 0)
    for i in shape.nodes:
        assert shape.pair_Q_node(i, lam) == shape.pair_Q(
            tuple(1 if j == i else 0 for j in shape.nodes), lam)
    lat = (1, 0, -2)
    for j in shape.short_nodes:
        unit = tuple(1 if k == j - 1 else 0 for k in range(shape.n - 1))
        assert shape.pair_A_node(j, lat) == shape.pair_A(unit, lat)
    tj = (2, -1)
    for s in shape.directions:
        unit = tuple(1 if k == s - 1 else 0 for k in range(shape.N - 1))
        assert shape.pair_J_node(s, tj) == shape.pair_J(unit, tj)
