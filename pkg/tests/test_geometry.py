"""Tests for multiplicity-pair admissibility arithmetic."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieclass.geometry import (
    MultiplicityPair,
    markert_check,
    munzner_admissible,
    phi,
    report,
    stolz_admissible,
)


def P(m1, m2):
    return MultiplicityPair(m1, m2)


def test_munzner_examples():
    assert munzner_admissible(P(4, 4)) == (True, "equal-multiplicity")
    assert munzner_admissible(P(2, 3)) == (True, "odd-sum")
    assert munzner_admissible(P(2, 4)) == (False, None)
    assert munzner_admissible(P(1, 6)) == (True, "multiplicity-one")
    assert munzner_admissible(P(3, 3)) == (False, None)
    with pytest.raises(ValueError):
        P(0, 4)


def test_phi_values():
    assert phi(0) == 0
    assert phi(7) == 3  # {1, 2, 4}
    assert phi(8) == 4  # {1, 2, 4, 8}
    assert [phi(k) for k in range(1, 9)] == [1, 2, 2, 3, 3, 3, 3, 4]


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 200))
def test_phi_recurrence(k):
    assert phi(k + 8) == phi(k) + 4
    assert phi(k + 1) >= phi(k)


def test_stolz_examples():
    assert stolz_admissible(P(4, 5)) == "pass"
    assert stolz_admissible(P(5, 6)) == "fail"
    assert stolz_admissible(P(3, 8)) == "pass"  # 2^phi(2) = 4 divides 12
    assert stolz_admissible(P(3, 6)) == "fail"
    assert stolz_admissible(P(1, 5)) == "not-applicable"
    assert stolz_admissible(P(5, 5)) == "not-applicable"
    assert stolz_admissible(P(6, 2)) == "not-applicable"


def test_markert_examples():
    assert markert_check(P(4, 11)) == "pass"  # k=3, 2^phi(3)=4 divides 16
    assert markert_check(P(6, 9)) == "pass"  # k=3, 4 divides 16
    assert markert_check(P(1, 5)) == "not-applicable"
    assert markert_check(P(4, 5)) == "pass"  # k=1, 2 divides 10
    assert markert_check(P(3, 6)) == "fail"  # k=2, 4 does not divide 10


@settings(max_examples=120, deadline=None)
@given(st.integers(2, 40), st.integers(3, 60))
def test_markert_matches_stolz_when_gap_large(m1, m2):
    if not m1 < m2:
        return
    p = P(m1, m2)
    if m2 - m1 >= m1 - 1 and (m1, m2) != (4, 5):
        assert markert_check(p) == stolz_admissible(p)


def test_report_examples():
    r = report(P(4, 5))
    assert r.dims == (18, 13, 14)
    assert r.stolz == "pass"
    assert r.cohomology == {"P": (4, 9), "L": (5, 9), "F": (4, 5, 9)}

    r = report(P(1, 1))
    assert r.dims == (4, 3, 3)
    assert r.munzner == (True, "equal-multiplicity")

    r = report(P(8, 7))
    assert r.dims == (30, 23, 22)
    assert r.munzner == (True, "odd-sum")

    assert report(P(2, 4)).cohomology is None


@settings(max_examples=120, deadline=None)
@given(st.integers(1, 64), st.integers(1, 64))
def test_dimension_identities(m1, m2):
    dims = report(P(m1, m2)).dims
    dim_f, dim_p, dim_l = dims
    assert dim_p + dim_l == 3 * (m1 + m2)
    assert dim_p + dim_l == dim_f + (m1 + m2)


def test_realized_pairs_admissible():
    realized = [(1, 5), (2, 9), (4, 11), (4, 5), (6, 9), (3, 4), (8, 7), (7, 8)]
    for m1, m2 in realized:
        ok, _ = munzner_admissible(P(m1, m2))
        assert ok, (m1, m2)
        verdict = stolz_admissible(P(m1, m2))
        assert verdict in ("pass", "not-applicable"), (m1, m2, verdict)
