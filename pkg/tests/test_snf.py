"""Tests for :mod:`lieclass.snf`.

The reduction is checked against an independent oracle: invariant factors
computed from determinantal divisors (gcds of all k x k minors), which never
performs a row or column operation.
"""

from __future__ import annotations

from itertools import combinations
from math import gcd, prod

from hypothesis import given, settings
from hypothesis import strategies as st

from lieclass.snf import AbelianGroup, cokernel, matrix_rank, smith_invariants


def _minor_det(m, rows, cols):
    sub = [[m[i][j] for j in cols] for i in rows]
    n = len(sub)
    if n == 1:
        return sub[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in sub[1:]]
        total += (-1) ** j * sub[0][j] * _minor_det_from(minor)
    return total


def _minor_det_from(sub):
    n = len(sub)
    if n == 0:
        return 1
    if n == 1:
        return sub[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in sub[1:]]
        total += (-1) ** j * sub[0][j] * _minor_det_from(minor)
    return total


def invariants_by_determinantal_divisors(m) -> tuple[int, ...]:
    """Oracle: d_k = g_k / g_{k-1} with g_k the gcd of all k x k minors."""
    rows, cols = len(m), len(m[0])
    size = min(rows, cols)
    gs = [1]
    for k in range(1, size + 1):
        vals = [
            _minor_det(m, r, c)
            for r in combinations(range(rows), k)
            for c in combinations(range(cols), k)
        ]
        g = 0
        for v in vals:
            g = gcd(g, v)
        gs.append(g)
        if g == 0:
            break
    out = []
    for k in range(1, size + 1):
        if k < len(gs) and gs[k] != 0:
            out.append(gs[k] // gs[k - 1])
        else:
            out.append(0)
    return tuple(out)


def test_known_values():
    assert smith_invariants([[3, 1], [0, 4]]) == (1, 12)
    assert smith_invariants([[1, 0], [0, 1]]) == (1, 1)
    assert smith_invariants([[2, 0], [0, 3]]) == (1, 6)
    assert smith_invariants([[11]]) == (11,)
    assert smith_invariants([[1, 3], [1, 1]]) == (1, 2)
    assert smith_invariants([[1, 3], [3, 1]]) == (1, 8)
    assert smith_invariants([[0]]) == (0,)
    assert smith_invariants([[2, 4], [4, 8]]) == (2, 0)
    assert smith_invariants([[1, 2, 3]]) == (1,)
    assert smith_invariants([]) == ()


matrices = st.integers(min_value=1, max_value=4).flatmap(
    lambda r: st.integers(min_value=1, max_value=4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(min_value=-30, max_value=30), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        )
    )
)


@given(matrices)
@settings(max_examples=300, deadline=None)
def test_matches_determinantal_divisor_oracle(m):
    assert smith_invariants(m) == invariants_by_determinantal_divisors(m)


@given(matrices)
@settings(max_examples=200, deadline=None)
def test_divisibility_chain(m):
    inv = smith_invariants(m)
    nonzero = [d for d in inv if d]
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    # zeros (if any) are trailing
    assert list(inv) == nonzero + [0] * (len(inv) - len(nonzero))


@given(
    st.integers(min_value=1, max_value=4).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(min_value=-20, max_value=20), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
)
@settings(max_examples=200, deadline=None)
def test_square_determinant(m):
    det = _minor_det_from(m)
    inv = smith_invariants(m)
    if det:
        assert prod(inv) == abs(det)
    else:
        assert 0 in inv


def test_cokernel():
    assert str(cokernel([[1, 3], [3, 1]])) == "Z/8"
    assert str(cokernel([[1, 3], [1, 1]])) == "Z/2"
    assert str(cokernel([[11]])) == "Z/11"
    assert str(cokernel([[1, 1], [0, 2]])) == "Z/2"
    assert cokernel([[2, 0], [0, 2]]) == AbelianGroup((2, 2), 0)
    assert cokernel([[1], [1]]) == AbelianGroup((), 1)  # one free generator left
    assert cokernel([], ambient_rank=2) == AbelianGroup((), 2)
    assert cokernel([[1, 0], [0, 1]]).is_trivial


def test_abelian_group_descriptor():
    assert str(AbelianGroup()) == "0"
    assert str(AbelianGroup((2, 2))) == "Z/2+Z/2"
    assert str(AbelianGroup(free_rank=2)) == "Z+Z"
    assert AbelianGroup.from_orders([2, 4, 3]) == AbelianGroup((2, 12))
    assert AbelianGroup.from_orders([6, 4]) == AbelianGroup((2, 12))
    assert AbelianGroup.from_orders([1, 1]).is_trivial
    assert AbelianGroup((4,)).exponent() == 4
    assert AbelianGroup((2, 4)).order == 8
    assert AbelianGroup((), 1).order is None


def test_rank():
    assert matrix_rank([[1, 2], [2, 4]]) == 1
    assert matrix_rank([[1, 0], [0, 1]]) == 2
    assert matrix_rank([[0, 0], [0, 0]]) == 0
