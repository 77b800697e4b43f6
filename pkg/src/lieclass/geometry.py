"""Admissibility arithmetic for multiplicity pairs of compact quadrangles
and isoparametric hypersurfaces with four principal curvatures, plus the
bridge from multiplicities to homogeneous point-space candidates.

Everything here is closed-form number theory on the pair (m1, m2); the
geometric content enters only through which inequalities and divisibility
conditions are checked.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "AdmissibilityReport",
    "MultiplicityPair",
    "PointSpaceCandidates",
    "candidate_point_spaces",
    "markert_check",
    "munzner_admissible",
    "phi",
    "report",
    "stolz_admissible",
]


@dataclass(frozen=True)
class MultiplicityPair:
    m1: int
    m2: int

    def __post_init__(self) -> None:
        if self.m1 < 1 or self.m2 < 1:
            raise ValueError("multiplicities must be >= 1")

    @property
    def total(self) -> int:
        return self.m1 + self.m2


def munzner_admissible(p: MultiplicityPair) -> tuple[bool, str | None]:
    """Basic admissibility of a multiplicity pair; returns the verdict and
    the first clause that grants it (None on failure)."""
    if p.m1 == p.m2 and p.m1 in (1, 2, 4):
        return True, "equal-multiplicity"
    if 1 in (p.m1, p.m2):
        return True, "multiplicity-one"
    if p.total % 2:
        return True, "odd-sum"
    return False, None


def phi(k: int) -> int:
    """Count of 1 <= i <= k with i congruent to 0, 1, 2, or 4 mod 8."""
    if k < 0:
        raise ValueError("phi needs k >= 0")
    return sum(1 for i in range(1, k + 1) if i % 8 in (0, 1, 2, 4))


def stolz_admissible(p: MultiplicityPair) -> str:
    """Divisibility constraint on ordered pairs 2 <= m1 < m2: pass iff the
    pair is the special (4, 5) or 2^phi(m1-1) divides m1+m2+1.
    Returns "pass", "fail", or "not-applicable" (outside the hypothesis)."""
    if not 2 <= p.m1 < p.m2:
        return "not-applicable"
    if (p.m1, p.m2) == (4, 5):
        return "pass"
    return "pass" if (p.total + 1) % 2 ** phi(p.m1 - 1) == 0 else "fail"


def markert_check(p: MultiplicityPair) -> str:
    """Sharper divisibility constraint with k = min(m2-m1, m1-1); same
    tri-state convention as :func:`stolz_admissible`."""
    if not 2 <= p.m1 < p.m2:
        return "not-applicable"
    k = min(p.m2 - p.m1, p.m1 - 1)
    return "pass" if (p.total + 1) % 2 ** phi(k) == 0 else "fail"


@dataclass(frozen=True)
class AdmissibilityReport:
    pair: MultiplicityPair
    munzner: tuple[bool, str | None]
    stolz: str
    markert: str
    dims: tuple[int, int, int]  # (dim F, dim P, dim L)
    cohomology: dict[str, tuple[int, ...]] | None


def report(p: MultiplicityPair) -> AdmissibilityReport:
    """Full admissibility report: dimensions of the flag space and the two
    focal spaces, sphere-product cohomology patterns (odd total only), and
    all three verdicts."""
    m1, m2 = p.m1, p.m2
    dims = (2 * (m1 + m2), 2 * m1 + m2, 2 * m2 + m1)
    cohomology = None
    if p.total % 2:
        cohomology = {
            "P": (m1, m1 + m2),
            "L": (m2, m1 + m2),
            "F": (m1, m2, m1 + m2),
        }
    return AdmissibilityReport(
        pair=p,
        munzner=munzner_admissible(p),
        stolz=stolz_admissible(p),
        markert=markert_check(p),
        dims=dims,
        cohomology=cohomology,
    )


@dataclass(frozen=True)
class PointSpaceCandidates:
    """Classifier output for the point space of a quadrangle with the given
    multiplicities: sphere-product pattern (n1, n2) = (m1, m1+m2)."""

    pair: MultiplicityPair
    residual: tuple[int, int]
    rows: tuple


def candidate_point_spaces(p: MultiplicityPair, max_rank: int) -> PointSpaceCandidates:
    """Homogeneous candidates for the point space: the classifier is asked
    for spaces shaped like S^{m1} x S^{m1+m2}.

    Only the envelope m1 >= 3 with odd m1+m2 is classified; anything else
    is rejected explicitly.
    """
    if p.m1 < 3:
        raise ValueError(
            f"multiplicities ({p.m1},{p.m2}) are outside the classified "
            "envelope: need m1 >= 3"
        )
    if p.total % 2 == 0:
        raise ValueError(
            f"multiplicities ({p.m1},{p.m2}) are outside the classified "
            "envelope: need m1+m2 odd"
        )
    from .classify import classify_pattern

    n1, n2 = p.m1, p.m1 + p.m2
    rows = classify_pattern(n1=n1, n2=n2, max_rank=max_rank)
    return PointSpaceCandidates(pair=p, residual=(n1, n2), rows=tuple(rows))
