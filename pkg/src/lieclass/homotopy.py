"""Closed-form rational homotopy and cohomology bookkeeping.

Homogeneous spaces handled by the classification have rational cohomology
that is either free graded-commutative or a truncated polynomial algebra
tensored with an exterior one; in both cases the nonzero rational homotopy
ranks are read off generator-by-generator.  The dimension-budget collapse
criterion reduces to exponent counting.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

__all__ = [
    "EMAlgebra",
    "FreeAlgebraSpec",
    "TruncatedAlgebraSpec",
    "collapse_budget_case1",
    "em_rational_cohomology",
    "homotopy_ranks_free",
    "homotopy_ranks_truncated",
]


def _check_degrees(gens: tuple[int, ...], parity: int, minimum: int, label: str) -> None:
    for d in gens:
        if d < minimum or d % 2 != parity:
            raise ValueError(f"{label} degree {d} is invalid")


@dataclass(frozen=True)
class FreeAlgebraSpec:
    """Free graded-commutative algebra: polynomial generators in even
    degrees, exterior generators in odd degrees."""

    even_gens: tuple[int, ...] = ()
    odd_gens: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _check_degrees(self.even_gens, 0, 2, "even generator")
        _check_degrees(self.odd_gens, 1, 3, "odd generator")


@dataclass(frozen=True)
class TruncatedAlgebraSpec:
    """Truncated polynomial algebra on one even generator ``a`` with
    ``a^m = 0``, tensored with an exterior algebra on odd generators."""

    a_deg: int
    trunc_power: int
    odd_gens: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.a_deg < 2 or self.a_deg % 2:
            raise ValueError(f"truncated generator degree {self.a_deg} must be even >= 2")
        if self.trunc_power < 2:
            raise ValueError("truncation power must be >= 2")
        _check_degrees(self.odd_gens, 1, 3, "odd generator")


def homotopy_ranks_free(s: FreeAlgebraSpec) -> dict[int, int]:
    """Rational homotopy ranks of a space with free rational cohomology:
    one rank per generator, in the generator's degree."""
    return dict(sorted(Counter(s.even_gens + s.odd_gens).items()))


def homotopy_ranks_truncated(s: TruncatedAlgebraSpec) -> dict[int, int]:
    """Rational homotopy ranks for the truncated case: rank 1 in the degree
    of ``a``, one rank per odd generator, and one extra rank in degree
    ``m*deg(a) - 1``."""
    top = s.trunc_power * s.a_deg - 1
    assert top != s.a_deg  # parity: top is odd, deg(a) even
    ranks = Counter(s.odd_gens)
    ranks[s.a_deg] += 1
    ranks[top] += 1
    return dict(sorted(ranks.items()))


@dataclass(frozen=True)
class EMAlgebra:
    """Rational cohomology of a product of Eilenberg-MacLane spaces of one
    degree: ``kind`` is trivial/exterior/polynomial, with one generator per
    free summand (torsion contributes nothing rationally)."""

    kind: str
    gens: tuple[int, ...] = ()


def em_rational_cohomology(rank: int, n: int) -> EMAlgebra:
    """Rational cohomology of a space of type (pi, n) where pi has the
    given free rank: exterior for odd ``n``, polynomial for even ``n``,
    trivial when the rank is zero."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    if rank < 0:
        raise ValueError("rank must be >= 0")
    if rank == 0:
        return EMAlgebra("trivial")
    kind = "exterior" if n % 2 else "polynomial"
    return EMAlgebra(kind, (n,) * rank)


def collapse_budget_case1(
    g_exps: tuple[int, ...], h_exps: tuple[int, ...], r: int
) -> bool:
    """Dimension-budget criterion for the collapsing spectral sequence of a
    homogeneous space with free rational cohomology on ``r`` new odd
    generators: the rank gap must pay for the new generators exactly."""
    return len(g_exps) - len(h_exps) == r
