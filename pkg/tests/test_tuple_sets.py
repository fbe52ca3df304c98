import itertools

import pytest
from hypothesis import given, settings, strategies as st

from kacmax.affine_core import CartanData, is_dominant, weight_from_x
from kacmax.tuple_sets import (
    enumerate_M,
    enumerate_S_bruteforce,
    format_x,
    is_in_I,
    max_ell,
    parse_x,
)

# family-5 columns of the level-3 boundary table, frozen by hand
FAMILY5_TABLE = {
    2: {(0, 0): {(0,)}, (1, 1): {(1,)}, (1, 2): set(), (2, 1): set()},
    3: {(0, 0): {(0, 0)}, (1, 1): {(1, 1)}, (1, 2): {(1, 2)}, (2, 1): {(2, 1)}},
    4: {
        (0, 0): {(0, 0, 0)},
        (1, 1): {(1, 1, 1), (1, 2, 1)},
        (1, 2): {(1, 2, 2)},
        (2, 1): {(2, 2, 1)},
    },
    5: {
        (0, 0): {(0, 0, 0, 0)},
        (1, 1): {(1, 1, 1, 1), (1, 2, 2, 1)},
        (1, 2): {(1, 2, 2, 2), (1, 2, 3, 2)},
        (2, 1): {(2, 2, 2, 1), (2, 3, 2, 1)},
    },
    6: {
        (0, 0): {(0, 0, 0, 0, 0)},
        (1, 1): {(1, 1, 1, 1, 1), (1, 2, 2, 2, 1), (1, 2, 3, 2, 1)},
        (1, 2): {(1, 2, 2, 2, 2), (1, 2, 3, 3, 2), (1, 2, 3, 4, 2)},
        (2, 1): {(2, 2, 2, 2, 1), (2, 3, 3, 2, 1), (2, 4, 3, 2, 1)},
    },
}


def test_family5_level3_table():
    for n, columns in FAMILY5_TABLE.items():
        for (x1, xn1), want in columns.items():
            assert set(enumerate_M(5, 0, n, x1, xn1)) == want, (n, x1, xn1)


def test_format_parse_roundtrip():
    assert format_x((1, 2, 3, 2, 1)) == "(1,2,3,2,1)"
    assert parse_x("(1,2,3,2,1)") == (1, 2, 3, 2, 1)
    assert parse_x(" (0) ") == (0,)
    with pytest.raises(ValueError):
        parse_x("1,2,3")
    with pytest.raises(ValueError):
        parse_x("()")


def test_is_in_I():
    # forward: differences weakly decreasing within the window
    assert is_in_I((1, 3, 5, 6), 1, 2)
    assert not is_in_I((1, 2, 4), 1, 2)  # differences increase
    assert not is_in_I((1, 4), 1, 2)  # difference too large
    assert is_in_I((7,), 1, 2)  # single entry, vacuous
    # reversed: drops weakly increase left to right
    assert is_in_I((5, 4, 2), 1, 2, reverse=True)
    assert not is_in_I((5, 3, 2), 1, 2, reverse=True)
    # strictly decreasing once the minimum drop is positive
    assert all(a > b for a, b in itertools.pairwise((5, 4, 2)))


def test_max_ell_known_values():
    assert max_ell(1, 1, 0, 6) == 3
    assert max_ell(1, 2, 0, 6) == 4
    assert max_ell(1, 1, 0, 2) == 1
    assert max_ell(2, 1, 0, 3) == 2
    assert max_ell(1, 1, 3, 0) == 1


def test_max_ell_errors():
    with pytest.raises(ValueError):
        max_ell(0, 1, 0, 5)
    with pytest.raises(ValueError):
        max_ell(1, 1, 0, -1)  # even ell = 0 fails


@given(
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=1, max_value=6),
    st.integers(min_value=0, max_value=8),
    st.integers(min_value=0, max_value=12),
)
def test_max_ell_matches_linear_scan(c, d, e, f):
    def cost(ell):
        return -(-ell // c) + -(-(ell - e) // d)

    best = None
    for ell in range(0, c * (f + e) + d * f + 2):
        if cost(ell) <= f:
            best = ell
    assert best is not None
    assert max_ell(c, d, e, f) == best


def test_enumerate_M_validation():
    with pytest.raises(ValueError):
        enumerate_M(6, 0, 4, 1, 1)
    with pytest.raises(ValueError):
        enumerate_M(5, 4, 4, 1, 1)  # s out of range
    with pytest.raises(ValueError):
        enumerate_M(5, 0, 1, 0, 0)


def test_families_1_to_4_empty_for_s_zero():
    for fam in (1, 2, 3, 4):
        for n in (3, 5, 6):
            assert enumerate_M(fam, 0, n, 2, 1) == frozenset()


def test_mirror_symmetry():
    for n in (4, 5, 6, 7):
        for s in range(1, n):
            for x1, xn1 in [(1, 1), (1, 2), (2, 1), (0, 2)]:
                m1 = enumerate_M(1, s, n, x1, xn1)
                m3 = enumerate_M(3, n - s, n, xn1, x1)
                assert m3 == frozenset(t[::-1] for t in m1)
                m2 = enumerate_M(2, s, n, x1, xn1)
                m4 = enumerate_M(4, n - s, n, xn1, x1)
                assert m4 == frozenset(t[::-1] for t in m2)


def test_n2_boundary_mismatch_is_empty():
    for fam in (1, 2, 3, 4, 5):
        assert enumerate_M(fam, 1, 2, 1, 2) == frozenset()
    assert enumerate_S_bruteforce(2, 1, 1, 2) == frozenset()
    assert enumerate_S_bruteforce(2, 0, 1, 1) == frozenset({(1,)})


@st.composite
def family_cells(draw):
    n = draw(st.integers(min_value=2, max_value=8))
    s = draw(st.integers(min_value=0, max_value=n - 1))
    x1 = draw(st.integers(min_value=0, max_value=3))
    xn1 = draw(st.integers(min_value=0, max_value=3))
    return n, s, x1, xn1


@settings(max_examples=60, deadline=None)
@given(family_cells())
def test_families_cover_the_inequality_system(cell):
    n, s, x1, xn1 = cell
    union = set()
    for fam in (1, 2, 3, 4, 5):
        union |= enumerate_M(fam, s, n, x1, xn1)
    assert union == set(enumerate_S_bruteforce(n, s, x1, xn1))


@settings(max_examples=60, deadline=None)
@given(family_cells())
def test_families_pairwise_disjoint_off_zero(cell):
    n, s, x1, xn1 = cell
    if s == 0:
        return
    fams = [enumerate_M(fam, s, n, x1, xn1) for fam in (1, 2, 3, 4, 5)]
    for a, b in itertools.combinations(fams, 2):
        assert not (a & b)


@settings(max_examples=40, deadline=None)
@given(family_cells())
def test_members_give_dominant_weights_at_minimal_level(cell):
    n, s, x1, xn1 = cell
    cd = CartanData(n)
    k = x1 + xn1 + 1
    for x in enumerate_S_bruteforce(n, s, x1, xn1):
        assert is_dominant(cd, weight_from_x(n, k, s, x))


def test_degenerate_final_plateau():
    # when the last coordinate is 0 the jump target is height zero and the
    # descent after s proceeds by unit steps; these were once dropped
    assert enumerate_M(1, 2, 3, 1, 0) == frozenset({(1, 0)})
    assert enumerate_M(3, 1, 3, 0, 1) == frozenset({(0, 1)})
    assert enumerate_M(1, 3, 4, 2, 0) == frozenset({(2, 1, 0)})
    assert (1, 2, 1, 0) in enumerate_M(1, 4, 5, 1, 0)


def test_bruteforce_respects_boundary():
    for x in enumerate_S_bruteforce(6, 2, 1, 2):
        assert x[0] == 1 and x[-1] == 2


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
