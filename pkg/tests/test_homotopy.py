"""Tests for rational homotopy/cohomology closed forms."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieclass.cartan import SimpleType, exponents
from lieclass.homotopy import (
    EMAlgebra,
    FreeAlgebraSpec,
    TruncatedAlgebraSpec,
    collapse_budget_case1,
    em_rational_cohomology,
    homotopy_ranks_free,
    homotopy_ranks_truncated,
)


def degrees(family: str, rank: int) -> tuple[int, ...]:
    return exponents(SimpleType(family, rank))


def test_free_examples():
    assert homotopy_ranks_free(FreeAlgebraSpec(odd_gens=(3, 5))) == {3: 1, 5: 1}
    assert homotopy_ranks_free(FreeAlgebraSpec()) == {}
    assert homotopy_ranks_free(FreeAlgebraSpec(odd_gens=(3, 3))) == {3: 2}
    assert homotopy_ranks_free(FreeAlgebraSpec(even_gens=(4,), odd_gens=(3, 7))) == {
        3: 1,
        4: 1,
        7: 1,
    }


def test_spec_validation():
    with pytest.raises(ValueError):
        FreeAlgebraSpec(even_gens=(3,))
    with pytest.raises(ValueError):
        FreeAlgebraSpec(odd_gens=(4,))
    with pytest.raises(ValueError):
        FreeAlgebraSpec(odd_gens=(1,))
    with pytest.raises(ValueError):
        TruncatedAlgebraSpec(a_deg=3, trunc_power=2)
    with pytest.raises(ValueError):
        TruncatedAlgebraSpec(a_deg=4, trunc_power=1)


def test_truncated_examples():
    for n in range(1, 11):
        s = TruncatedAlgebraSpec(a_deg=2 * n, trunc_power=2)
        assert homotopy_ranks_truncated(s) == {2 * n: 1, 4 * n - 1: 1}
    assert homotopy_ranks_truncated(TruncatedAlgebraSpec(2, 3)) == {2: 1, 5: 1}
    assert homotopy_ranks_truncated(TruncatedAlgebraSpec(4, 2, (11,))) == {
        4: 1,
        7: 1,
        11: 1,
    }
    # An odd generator in the top degree stacks with the extra rank.
    assert homotopy_ranks_truncated(TruncatedAlgebraSpec(4, 2, (7, 9))) == {
        4: 1,
        7: 2,
        9: 1,
    }


free_specs = st.builds(
    FreeAlgebraSpec,
    st.lists(st.integers(1, 30).map(lambda k: 2 * k), max_size=6).map(tuple),
    st.lists(st.integers(1, 30).map(lambda k: 2 * k + 1), max_size=6).map(tuple),
)


@settings(max_examples=100, deadline=None)
@given(free_specs)
def test_free_total_is_generator_count(s):
    table = homotopy_ranks_free(s)
    assert sum(table.values()) == len(s.even_gens) + len(s.odd_gens)
    assert all(v > 0 for v in table.values())


truncated_specs = st.builds(
    TruncatedAlgebraSpec,
    st.integers(1, 20).map(lambda k: 2 * k),
    st.integers(2, 6),
    st.lists(st.integers(1, 30).map(lambda k: 2 * k + 1), max_size=6).map(tuple),
)


@settings(max_examples=100, deadline=None)
@given(truncated_specs)
def test_truncated_totals(s):
    table = homotopy_ranks_truncated(s)
    assert sum(table.values()) == len(s.odd_gens) + 2
    assert table[s.a_deg] == 1
    top = s.trunc_power * s.a_deg - 1
    assert table[top] == s.odd_gens.count(top) + 1


def test_em_examples():
    assert em_rational_cohomology(1, 3) == EMAlgebra("exterior", (3,))
    assert em_rational_cohomology(0, 5) == EMAlgebra("trivial")
    assert em_rational_cohomology(2, 4) == EMAlgebra("polynomial", (4, 4))
    with pytest.raises(ValueError):
        em_rational_cohomology(1, 0)
    with pytest.raises(ValueError):
        em_rational_cohomology(-1, 2)


def test_collapse_budget():
    assert collapse_budget_case1(degrees("A", 4), degrees("A", 2), 2)
    assert not collapse_budget_case1(degrees("A", 4), degrees("A", 3), 2)
    assert collapse_budget_case1(degrees("A", 4), degrees("A", 3), 1)
    assert collapse_budget_case1((), (), 0)
