import pytest
from hypothesis import given, strategies as st

from kacmax.affine_core import (
    AlphaExpansion,
    CartanData,
    classical_apply,
    gamma,
    is_dominant,
    weight_from_x,
)


def test_cartan_entries_generic():
    cd = CartanData(4)
    assert [[cd.entry(i, j) for j in range(4)] for i in range(4)] == [
        [2, -1, 0, -1],
        [-1, 2, -1, 0],
        [0, -1, 2, -1],
        [-1, 0, -1, 2],
    ]


def test_cartan_entries_rank_one_affine():
    # n = 2 is special: the two nodes are doubly linked
    cd = CartanData(2)
    assert [[cd.entry(i, j) for j in range(2)] for i in range(2)] == [[2, -2], [-2, 2]]


def test_classical_matrix_drops_node_zero():
    cd = CartanData(5)
    assert cd.classical_matrix == (
        (2, -1, 0, 0),
        (-1, 2, -1, 0),
        (0, -1, 2, -1),
        (0, 0, -1, 2),
    )


def test_classical_apply():
    cd = CartanData(4)
    assert classical_apply(cd, (1, 2, 1)) == (0, 2, 0)
    assert classical_apply(cd, (1, 1, 1)) == (1, 0, 1)


def test_weight_from_x_staircase():
    w = weight_from_x(4, 2, 0, (1, 2, 1))
    assert w.m == (2, 1, 0, 1)
    assert (w.n, w.k, w.s) == (4, 2, 0)


def test_weight_from_x_zero_tuple_is_highest_weight():
    w = weight_from_x(6, 3, 2, (0,) * 5)
    assert w.m == (0,) * 6


def test_weight_from_x_validates():
    with pytest.raises(ValueError):
        weight_from_x(4, 2, 0, (1, 2))  # wrong length
    with pytest.raises(ValueError):
        weight_from_x(4, 2, 0, (1, -1, 0))


def test_gamma_values():
    assert gamma(8, 4, 3).m == (4, 3, 2, 1, 0, 1, 2, 3)
    assert gamma(5, 2, 2).m == (2, 1, 0, 0, 1)
    assert gamma(2, 1, 1).m == (1, 0)
    assert gamma(7, 3, 5).m == (3, 2, 1, 0, 0, 1, 2)


def test_gamma_domain():
    with pytest.raises(ValueError):
        gamma(5, 3, 2)  # ell beyond floor(n/2)
    with pytest.raises(ValueError):
        gamma(4, 0, 2)


def test_is_dominant_examples():
    cd = CartanData(4)
    assert is_dominant(cd, AlphaExpansion(4, 2, 0, (0, 0, 0, 0)))
    assert is_dominant(cd, AlphaExpansion(4, 2, 0, (1, 0, 0, 0)))
    # 2*(node-0 weight) - alpha_1 is not dominant: pairing with h_1 is -2
    assert not is_dominant(cd, AlphaExpansion(4, 2, 0, (0, 1, 0, 0)))


def test_is_dominant_rank_mismatch():
    with pytest.raises(ValueError):
        is_dominant(CartanData(3), AlphaExpansion(4, 2, 0, (0, 0, 0, 0)))


def test_highest_weight_is_dominant_every_s():
    for n in range(2, 7):
        cd = CartanData(n)
        for s in range(n):
            for k in (1, 2, 5):
                assert is_dominant(cd, weight_from_x(n, k, s, (0,) * (n - 1)))


@st.composite
def expansions(draw):
    n = draw(st.integers(min_value=2, max_value=7))
    k = draw(st.integers(min_value=1, max_value=6))
    s = draw(st.integers(min_value=0, max_value=n - 1))
    m = tuple(draw(st.integers(min_value=0, max_value=9)) for _ in range(n))
    return AlphaExpansion(n, k, s, m)


@given(expansions())
def test_json_roundtrip(w):
    assert AlphaExpansion.from_json(w.to_json()) == w


@st.composite
def x_tuples(draw):
    n = draw(st.integers(min_value=2, max_value=7))
    x = tuple(draw(st.integers(min_value=0, max_value=6)) for _ in range(n - 1))
    return n, x


@given(x_tuples())
def test_weight_from_x_m_vector_shape(nx):
    n, x = nx
    w = weight_from_x(n, 3, 0, x)
    ell = max(x)
    assert w.m[0] == ell
    assert all(w.m[i] == ell - x[i - 1] for i in range(1, n))
    assert min(w.m) == 0  # some coefficient is always zero


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
