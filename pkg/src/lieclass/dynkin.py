"""Dynkin indexes of representations and homomorphisms, and the induced
maps on third homotopy groups.

The index of a representation is normalised so that the natural module of
each classical family realises the diagram label of its defining inclusion
(A and C families: index 1 into the unitary/symplectic group of the module;
B and D families: index 1 into the orthogonal group of the real form).
For the rank-one family this reduces to ``su2_index``.

Indexes compose multiplicatively and add over direct sums; the map
``pi3(H) -> pi3(G)`` for products of almost simple groups is an integer
matrix of indexes whose cokernel is computed in Smith normal form.
"""

from __future__ import annotations

from math import comb

from .cartan import gram_fundamental, group_dimension
from .reps import Weight, dim_complex, field_type
from .snf import AbelianGroup, cokernel, smith_invariants

__all__ = [
    "index_compose",
    "index_of_rep",
    "index_quaternionic_form",
    "index_real_form",
    "index_sum",
    "pi3_cokernel",
    "smith_invariants",
    "su2_index",
]


def su2_index(k: int) -> int:
    """Index of the (k+1)-dimensional irreducible module of the rank-one
    group: ``binomial(k+2, 3)``."""
    if k < 1:
        raise ValueError("su2_index needs k >= 1")
    return comb(k + 2, 3)


def index_of_rep(w: Weight) -> int:
    """Index of the complex irreducible representation with highest weight
    ``w`` (0 for the trivial weight): the map into the unitary group of the
    module, exact and integral by construction."""
    if w.is_trivial:
        return 0
    gram = gram_fundamental(w.stype)
    n = w.stype.rank
    shifted = tuple(c + 2 for c in w.coeffs)  # w + twice the Weyl vector
    casimir = sum(
        w.coeffs[i] * gram[i][j] * shifted[j] for i in range(n) for j in range(n)
    )
    val = dim_complex(w) * casimir / group_dimension(w.stype)
    if val.denominator != 1:
        raise AssertionError(f"index of {w} is not integral")
    return int(val)


def index_real_form(w: Weight) -> int:
    """Index of the embedding into the orthogonal group of the real form of
    the module (real dimension >= 5 so that the target is almost simple).

    The complexification of the real form is the module itself for real
    type and module-plus-conjugate otherwise; the orthogonal-to-unitary
    inclusion has index 2, so the index halves exactly for real type.
    """
    j = index_of_rep(w)
    if field_type(w) != "R":
        return j
    if j % 2:
        raise AssertionError(f"odd orthogonal index for real-type {w}")
    return j // 2


def index_quaternionic_form(w: Weight) -> int:
    """Index of the embedding into the symplectic group of the quaternionic
    form of the module (quaternionic type: the module itself; otherwise the
    scalars are induced up, doubling the complex form and the index)."""
    j = index_of_rep(w)
    return j if field_type(w) == "H" else 2 * j


def index_sum(a: int, b: int) -> int:
    """Index of a direct sum."""
    return a + b


def index_compose(a: int, b: int) -> int:
    """Index of a composition of homomorphisms."""
    return a * b


def pi3_cokernel(matrix, ambient_rank: int | None = None) -> AbelianGroup:
    """Cokernel of the integer matrix ``pi3(H) -> pi3(G)`` (rows index the
    target factors).  ``ambient_rank`` pads an empty matrix to the number
    of target factors when H contributes nothing."""
    return cokernel(matrix, ambient_rank)
