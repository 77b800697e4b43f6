"""Tests for the static structure data in :mod:`lieclass.cartan`.

The exponent table is checked against an independent oracle: the degrees
are recomputed from the height distribution of the positive roots (the
conjugate-partition rule), which exercises only the root-system walk and
none of the closed forms.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction

import pytest

from lieclass.cartan import (
    Canonicalization,
    SimpleType,
    adjoint_weight,
    all_canonical_types,
    beta_fundamental,
    canonicalize,
    cartan_matrix,
    center,
    center_character,
    center_coweight,
    exponents,
    fundamental_dim,
    galois_involution,
    gram_fundamental,
    group_dimension,
    highest_root,
    inverse_cartan,
    positive_roots,
    symmetrizer,
)

ALL_TYPES = all_canonical_types(12)


def exponent_degrees_from_root_heights(t: SimpleType) -> tuple[int, ...]:
    """Independent oracle: degrees from the conjugate partition of the
    positive-root height distribution."""
    heights = Counter(r.height for r in positive_roots(t))
    mexp = []
    m = 1
    while any(v >= m for v in heights.values()):
        mexp.append(sum(1 for v in heights.values() if v >= m))
        m += 1
    return tuple(sorted(2 * e + 1 for e in mexp))


# ---------------------------------------------------------------------------
# canonicalize
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "family,rank,expected,alias",
    [
        ("C", 1, SimpleType("A", 1), "C1=A1"),
        ("B", 1, SimpleType("A", 1), "B1=A1"),
        ("C", 2, SimpleType("B", 2), "C2=B2"),
        ("D", 3, SimpleType("A", 3), "D3=A3"),
        ("A", 5, SimpleType("A", 5), None),
        ("E6", 6, SimpleType("E6", 6), None),
    ],
)
def test_canonicalize(family, rank, expected, alias):
    got = canonicalize(family, rank)
    assert got.type == expected
    assert got.alias == alias


def test_canonicalize_rejects_non_simple():
    with pytest.raises(ValueError):
        canonicalize("D", 2)
    with pytest.raises(ValueError):
        canonicalize("A", 0)
    with pytest.raises(ValueError):
        SimpleType("D", 2)
    with pytest.raises(ValueError):
        SimpleType("E6", 5)


def test_canonicalize_idempotent():
    for t in ALL_TYPES:
        again = canonicalize(t.family, t.rank)
        assert again.type == t and again.alias is None


def test_weight_relabeling():
    c2 = canonicalize("C", 2)
    assert c2.relabel_coeffs((1, 0)) == (0, 1)  # Sp(2) node 1 is B2 node 2
    assert c2.relabel_coeffs((0, 1)) == (1, 0)
    d3 = canonicalize("D", 3)
    assert d3.relabel_coeffs((1, 0, 0)) == (0, 1, 0)
    assert d3.relabel_coeffs((0, 1, 0)) == (1, 0, 0)
    assert d3.relabel_coeffs((0, 0, 1)) == (0, 0, 1)


# ---------------------------------------------------------------------------
# exponents
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "t,expected",
    [
        (SimpleType("A", 4), (3, 5, 7, 9)),
        (SimpleType("G2", 2), (3, 11)),
        (SimpleType("D", 4), (3, 7, 7, 11)),
        (SimpleType("E8", 8), (3, 15, 23, 27, 35, 39, 47, 59)),
        (SimpleType("E6", 6), (3, 9, 11, 15, 17, 23)),
        (SimpleType("E7", 7), (3, 11, 15, 19, 23, 27, 35)),
        (SimpleType("F4", 4), (3, 11, 15, 23)),
        (SimpleType("B", 2), (3, 7)),
        (SimpleType("C", 5), (3, 7, 11, 15, 19)),
        (SimpleType("D", 5), (3, 7, 9, 11, 15)),
    ],
)
def test_exponent_values(t, expected):
    assert exponents(t) == expected


def test_exponents_against_root_height_oracle():
    for t in ALL_TYPES:
        assert exponents(t) == exponent_degrees_from_root_heights(t), t


def test_exponent_shape():
    for t in ALL_TYPES:
        exps = exponents(t)
        assert len(exps) == t.rank
        assert all(e % 2 == 1 and e >= 3 for e in exps)
        assert tuple(sorted(exps)) == exps
        assert sum(exps) == group_dimension(t)


# ---------------------------------------------------------------------------
# root systems
# ---------------------------------------------------------------------------


def test_root_count_matches_dimension():
    for t in ALL_TYPES:
        assert 2 * len(positive_roots(t)) + t.rank == group_dimension(t)


def test_cartan_matrix_symmetrizable():
    for t in ALL_TYPES:
        a = cartan_matrix(t)
        d = symmetrizer(t)
        n = t.rank
        for i in range(n):
            for j in range(n):
                assert d[i] * a[i][j] == d[j] * a[j][i]


def test_inverse_cartan():
    for t in ALL_TYPES:
        a = cartan_matrix(t)
        ainv = inverse_cartan(t)
        n = t.rank
        for i in range(n):
            for j in range(n):
                s = sum(Fraction(a[i][k]) * ainv[k][j] for k in range(n))
                assert s == (1 if i == j else 0)


def test_gram_symmetric_positive_diagonal():
    for t in ALL_TYPES:
        g = gram_fundamental(t)
        n = t.rank
        for i in range(n):
            assert g[i][i] > 0
            for j in range(n):
                assert g[i][j] == g[j][i]


def test_highest_root_norm_two():
    for t in ALL_TYPES:
        th = highest_root(t)
        a = cartan_matrix(t)
        d = symmetrizer(t)
        n = t.rank
        norm = sum(
            th.root[i] * th.root[j] * d[i] * a[i][j] for i in range(n) for j in range(n)
        )
        assert norm == 2, t


def adjoint_weight_closed_form(t: SimpleType) -> tuple[int, ...]:
    n = t.rank
    w = [0] * n
    if t.family == "A":
        if n == 1:
            w[0] = 2
        else:
            w[0] = w[n - 1] = 1
    elif t.family == "B":
        w[1] = 1 if n >= 3 else 2
    elif t.family == "C":
        w[0] = 2
    elif t.family == "D":
        w[1] = 1
    elif t.family in ("E6", "E7"):
        w[5] = 1
    elif t.family in ("E8",):
        w[0] = 1
    elif t.family == "F4":
        w[3] = 1
    elif t.family == "G2":
        w[1] = 1
    return tuple(w)


def test_adjoint_weight():
    for t in ALL_TYPES:
        assert adjoint_weight(t) == adjoint_weight_closed_form(t), t


# ---------------------------------------------------------------------------
# center and center characters
# ---------------------------------------------------------------------------


def test_center_structures():
    assert center(SimpleType("A", 4)).structure == "cyclic(5)"
    assert center(SimpleType("D", 5)).structure == "cyclic(4)"
    assert center(SimpleType("D", 6)).structure == "klein"
    assert center(SimpleType("E6", 6)).structure == "cyclic(3)"
    assert center(SimpleType("E7", 7)).structure == "cyclic(2)"
    for fam in ("E8", "F4", "G2"):
        t = SimpleType(fam, {"E8": 8, "F4": 4, "G2": 2}[fam])
        assert center(t).structure == "trivial"
        assert center(t).order == 1


def test_center_character_denominators():
    for t in ALL_TYPES:
        spec = center(t)
        for i in range(1, t.rank + 1):
            chars = center_character(t, i)
            assert len(chars) == len(spec.orders)
            for val, order in zip(chars, spec.orders):
                assert 0 <= val < 1
                assert order % val.denominator == 0


def test_center_characters_type_a():
    for n in range(1, 13):
        t = SimpleType("A", n)
        for i in range(1, n + 1):
            assert center_character(t, i) == (Fraction(i, n + 1),)


def test_center_characters_types_bc():
    for n in range(2, 13):
        b = SimpleType("B", n)
        for i in range(1, n + 1):
            assert center_character(b, i) == (Fraction(1, 2) if i == n else Fraction(0),)
    for n in range(3, 13):  # C2 is spelled B2 canonically
        c = SimpleType("C", n)
        for i in range(1, n + 1):
            assert center_character(c, i) == (Fraction(i % 2, 2),)


def test_center_characters_type_d_odd():
    for n in (5, 7, 9, 11):
        t = SimpleType("D", n)
        for i in range(1, n - 1):
            assert center_character(t, i) == (Fraction(i % 2, 2),)
        last_two = center_character(t, n - 1) + center_character(t, n)
        # generator of Z/4 acting by a primitive fourth root of unity on
        # either half-spin representation, conjugate on the other
        assert sorted(last_two) == [Fraction(1, 4), Fraction(3, 4)]
        assert center_character(t, n - 1) == (Fraction(n, 4) - (n - (n % 4)) // 4,)


def test_center_characters_type_d_even():
    for n in (4, 6, 8, 10, 12):
        t = SimpleType("D", n)
        for i in range(1, n - 1):
            expect = (Fraction(i % 2, 2), Fraction(i % 2, 2))
            assert center_character(t, i) == expect
        # z acts trivially on the first half-spin module and by -1 on the
        # second; z' the other way around
        assert center_character(t, n - 1) == (Fraction(0), Fraction(1, 2))
        assert center_character(t, n) == (Fraction(1, 2), Fraction(0))


def test_center_characters_exceptional():
    e6 = SimpleType("E6", 6)
    assert [center_character(e6, i)[0] for i in range(1, 7)] == [
        Fraction(1, 3),
        Fraction(2, 3),
        Fraction(0),
        Fraction(1, 3),
        Fraction(2, 3),
        Fraction(0),
    ]
    e7 = SimpleType("E7", 7)
    assert [center_character(e7, i)[0] for i in range(1, 8)] == [
        Fraction(1, 2) if i in (1, 3, 7) else Fraction(0) for i in range(1, 8)
    ]


def test_center_character_spec_values():
    assert center_character(SimpleType("A", 4), 2) == (Fraction(2, 5),)
    assert center_character(SimpleType("C", 3), 2) == (Fraction(0),)
    assert center_character(SimpleType("D", 5), 4) == (Fraction(1, 4),)


def test_center_coweight_consistency():
    # the coweight rows are the unreduced character values
    for t in ALL_TYPES:
        spec = center(t)
        for g in range(len(spec.orders)):
            row = center_coweight(t, g)
            for i in range(1, t.rank + 1):
                x = row[i - 1]
                assert center_character(t, i)[g] == x - (x.numerator // x.denominator)


# ---------------------------------------------------------------------------
# conjugation and the beta indicator
# ---------------------------------------------------------------------------


def test_galois_involution_examples():
    assert galois_involution(SimpleType("A", 3)) == (3, 2, 1)
    assert galois_involution(SimpleType("D", 5)) == (1, 2, 3, 5, 4)
    assert galois_involution(SimpleType("B", 4)) == (1, 2, 3, 4)
    assert galois_involution(SimpleType("E6", 6)) == (5, 4, 3, 2, 1, 6)
    assert galois_involution(SimpleType("D", 6)) == (1, 2, 3, 4, 5, 6)


def test_galois_is_involution_preserving_dimension():
    for t in ALL_TYPES:
        sigma = galois_involution(t)
        for i in range(1, t.rank + 1):
            assert sigma[sigma[i - 1] - 1] == i
            assert fundamental_dim(t, i) == fundamental_dim(t, sigma[i - 1])


def test_beta_fundamental_values():
    assert beta_fundamental(SimpleType("A", 1), 1) == "H"
    assert beta_fundamental(SimpleType("A", 3), 2) == "R"
    assert beta_fundamental(SimpleType("A", 5), 3) == "H"
    assert beta_fundamental(SimpleType("A", 7), 4) == "R"
    assert beta_fundamental(SimpleType("B", 4), 4) == "R"
    assert beta_fundamental(SimpleType("B", 3), 3) == "R"
    assert beta_fundamental(SimpleType("B", 2), 2) == "H"
    assert beta_fundamental(SimpleType("B", 5), 5) == "H"
    assert beta_fundamental(SimpleType("C", 3), 3) == "H"
    assert beta_fundamental(SimpleType("C", 3), 2) == "R"
    assert beta_fundamental(SimpleType("D", 4), 4) == "R"
    assert beta_fundamental(SimpleType("D", 6), 6) == "H"
    assert beta_fundamental(SimpleType("E6", 6), 3) == "R"
    assert beta_fundamental(SimpleType("E6", 6), 6) == "R"
    assert beta_fundamental(SimpleType("E7", 7), 1) == "H"
    assert beta_fundamental(SimpleType("E7", 7), 6) == "R"
    assert beta_fundamental(SimpleType("G2", 2), 1) == "R"
    assert beta_fundamental(SimpleType("F4", 4), 1) == "R"


def test_beta_rejects_complex_weights():
    with pytest.raises(ValueError):
        beta_fundamental(SimpleType("A", 2), 1)
    with pytest.raises(ValueError):
        beta_fundamental(SimpleType("D", 5), 4)
    with pytest.raises(ValueError):
        beta_fundamental(SimpleType("E6", 6), 1)


# ---------------------------------------------------------------------------
# fundamental dimensions
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "t,i,expected",
    [
        (SimpleType("B", 3), 3, 8),
        (SimpleType("C", 3), 2, 14),
        (SimpleType("E7", 7), 1, 56),
        (SimpleType("B", 4), 4, 16),
        (SimpleType("D", 5), 4, 16),
        (SimpleType("D", 5), 5, 16),
        (SimpleType("A", 4), 2, 10),
        (SimpleType("C", 4), 3, 48),
        (SimpleType("G2", 2), 1, 7),
        (SimpleType("F4", 4), 1, 26),
        (SimpleType("E6", 6), 1, 27),
        (SimpleType("E6", 6), 3, 2925),
        (SimpleType("E8", 8), 1, 248),
        (SimpleType("E8", 8), 5, 6899079264),
    ],
)
def test_fundamental_dim(t, i, expected):
    assert fundamental_dim(t, i) == expected
