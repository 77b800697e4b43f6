"""Dominant-weight arithmetic for the compact simple Lie families.

Complex dimensions via the Weyl dimension formula, the conjugation action,
field types (R/C/H) via the parity rule over quaternionic fundamental
weights, real/quaternionic dimensions, kernels inside the center, full
weight systems with multiplicities (Freudenthal's recursion), and bounded
enumeration of irreducible representations.

All computations are exact; any non-integral intermediate that should be
integral raises instead of rounding.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .cartan import (
    CenterSpec,
    SimpleType,
    beta_fundamental,
    center,
    center_coweight,
    galois_involution,
    gram_fundamental,
    positive_roots,
    symmetrizer,
)
from .snf import AbelianGroup

__all__ = [
    "CenterSubgroup",
    "Irrep",
    "Weight",
    "center_action",
    "conjugate",
    "describe",
    "dim_complex",
    "dims_over",
    "enumerate_irreps",
    "field_type",
    "real_irreps_up_to",
    "rep_kernel",
    "two_rho_covector_pairing",
    "weight_multiplicities",
]


@dataclass(frozen=True, order=True)
class Weight:
    """A dominant weight: non-negative integer coefficients over the
    fundamental weights of a canonical simple type."""

    stype: SimpleType
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.stype.is_canonical:
            raise ValueError(f"{self.stype} is not canonical")
        if len(self.coeffs) != self.stype.rank:
            raise ValueError(
                f"expected {self.stype.rank} coefficients for {self.stype}, "
                f"got {len(self.coeffs)}"
            )
        if any(c < 0 for c in self.coeffs):
            raise ValueError("dominant weights have non-negative coefficients")

    @property
    def is_trivial(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        if self.is_trivial:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs, start=1):
            if c == 1:
                parts.append(f"w{i}")
            elif c:
                parts.append(f"{c}w{i}")
        return "+".join(parts)


# ---------------------------------------------------------------------------
# Weyl dimension formula
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _weyl_root_data(t: SimpleType) -> tuple[tuple[tuple[Fraction, ...], Fraction], ...]:
    """Per positive root: the vector ``w_i = c_i * d_i`` and its sum.

    ``<w_k, a> = d_i`` on fundamental weights makes the Weyl quotient for
    the root ``a`` equal to ``sum(w_i * (n_i + 1)) / sum(w_i)``.
    """
    d = symmetrizer(t)
    out = []
    for root in positive_roots(t):
        vec = tuple(Fraction(c) * di for c, di in zip(root.root, d))
        out.append((vec, sum(vec)))
    return tuple(out)


def dim_complex(w: Weight) -> int:
    """Complex dimension of the irreducible representation with highest
    weight ``w`` (Weyl dimension formula, exact)."""
    num = 1
    den = 1
    shifted = tuple(c + 1 for c in w.coeffs)
    for vec, denom in _weyl_root_data(w.stype):
        num_f = sum(v * s for v, s in zip(vec, shifted))
        num *= num_f.numerator * denom.denominator
        den *= num_f.denominator * denom.numerator
    if num % den:
        raise AssertionError(f"Weyl dimension of {w} is not integral")
    return num // den


@functools.lru_cache(maxsize=None)
def _two_rho_covector(t: SimpleType) -> tuple[Fraction, ...]:
    """Vector ``v`` with ``<w, 2 rho^v> = sum(v_i * n_i)`` for dominant ``w``."""
    d = symmetrizer(t)
    n = t.rank
    v = [Fraction(0)] * n
    for root in positive_roots(t):
        d_alpha = sum(
            Fraction(c) * di * f for c, di, f in zip(root.root, d, root.fund)
        ) / 2
        for i in range(n):
            v[i] += Fraction(root.root[i]) * d[i] / d_alpha
    return tuple(v)


def two_rho_covector_pairing(w: Weight) -> int:
    """The integer ``<w, 2 rho^v>`` (sum over positive coroots)."""
    val = sum(v * c for v, c in zip(_two_rho_covector(w.stype), w.coeffs))
    if val.denominator != 1:
        raise AssertionError(f"<{w}, 2 rho^v> is not integral")
    return int(val)


# ---------------------------------------------------------------------------
# Conjugation and field type
# ---------------------------------------------------------------------------


def conjugate(w: Weight) -> Weight:
    """The highest weight of the conjugate representation."""
    sigma = galois_involution(w.stype)
    out = [0] * w.stype.rank
    for i, c in enumerate(w.coeffs):
        out[sigma[i] - 1] = c
    return Weight(w.stype, tuple(out))


def field_type(w: Weight) -> str:
    """``"C"`` if ``w`` is not conjugation-fixed; otherwise ``"R"`` or
    ``"H"`` by the parity of the coefficient sum over the quaternionic
    conjugation-fixed fundamental weights."""
    if conjugate(w) != w:
        return "C"
    sigma = galois_involution(w.stype)
    parity = 0
    for i, c in enumerate(w.coeffs, start=1):
        if c and sigma[i - 1] == i and beta_fundamental(w.stype, i) == "H":
            parity += c
    return "H" if parity % 2 else "R"


def dims_over(w: Weight) -> tuple[int, int | None]:
    """``(dim_r, dim_h)`` of the representation.

    ``dim_r`` doubles the complex dimension unless the type is real.
    ``dim_h`` is the quaternionic dimension where the quaternionic form is
    defined (type H: half the complex dimension; type C: the complex
    dimension, for the induced module); it is ``None`` for real type.
    """
    d = dim_complex(w)
    ft = field_type(w)
    if ft == "R":
        return d, None
    if ft == "C":
        return 2 * d, d
    if d % 2:
        raise AssertionError(f"quaternionic representation {w} has odd dimension")
    return 2 * d, d // 2


# ---------------------------------------------------------------------------
# Center kernel
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CenterSubgroup:
    """A subgroup of the center of the simply connected group, given by its
    element list (exponent tuples over the center generators)."""

    ambient: CenterSpec
    elements: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_full(self) -> bool:
        return self.order == self.ambient.order

    def element_order(self, element: tuple[int, ...]) -> int:
        if not element:
            return 1
        return lcm(*(k // _gcd(a, k) for a, k in zip(element, self.ambient.orders)))

    def structure(self) -> AbelianGroup:
        """Isomorphism type (the center has at most two cyclic factors, so
        order and exponent determine the subgroup)."""
        n = self.order
        if n == 1:
            return AbelianGroup()
        e = max(self.element_order(el) for el in self.elements)
        if e == n:
            return AbelianGroup((n,))
        return AbelianGroup.from_orders([e, n // e])

    def __str__(self) -> str:
        return str(self.structure())


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def center_action(w: Weight) -> dict[tuple[int, ...], Fraction]:
    """Rotation number (in Q/Z) of every center element on the
    representation with highest weight ``w``."""
    spec = center(w.stype)
    rows = [center_coweight(w.stype, g) for g in range(len(spec.orders))]
    out: dict[tuple[int, ...], Fraction] = {}
    for el in spec.elements():
        val = Fraction(0)
        for a, row in zip(el, rows):
            val += a * sum(c * x for c, x in zip(w.coeffs, row))
        out[el] = val - (val.numerator // val.denominator)
    return out


def rep_kernel(w: Weight) -> CenterSubgroup:
    """The subgroup of the center acting trivially on the representation."""
    action = center_action(w)
    kernel = tuple(sorted(el for el, val in action.items() if val == 0))
    return CenterSubgroup(center(w.stype), kernel)


# ---------------------------------------------------------------------------
# Weight systems (Freudenthal)
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def weight_multiplicities(w: Weight) -> dict[tuple[int, ...], int]:
    """The full weight system of the irreducible representation with highest
    weight ``w``: a map from weights (fundamental coordinates, possibly
    negative) to multiplicities, computed by Freudenthal's recursion.

    The multiplicities sum to :func:`dim_complex` (asserted by tests).
    """
    t = w.stype
    n = t.rank
    gram = gram_fundamental(t)

    def pair(u: tuple, v: tuple) -> Fraction:
        return sum(
            Fraction(u[i]) * gram[i][j] * v[j] for i in range(n) for j in range(n)
        )

    simple_fund = []  # simple roots in fundamental coordinates
    for j in range(n):
        root = positive_roots(t)[j]
        simple_fund.append(root.fund)
    pos_fund = [r.fund for r in positive_roots(t)]

    rho = (1,) * n
    lam = w.coeffs
    lam_rho = tuple(a + b for a, b in zip(lam, rho))
    lam_rho_norm = pair(lam_rho, lam_rho)

    mults: dict[tuple[int, ...], int] = {lam: 1}
    level = [lam]
    while level:
        candidates = sorted(
            {
                tuple(a - b for a, b in zip(mu, alpha))
                for mu in level
                for alpha in simple_fund
            }
        )
        nxt = []
        for mu in candidates:
            if mu in mults:
                continue
            total = Fraction(0)
            for alpha in pos_fund:
                k = 1
                while True:
                    up = tuple(a + k * b for a, b in zip(mu, alpha))
                    m_up = mults.get(up)
                    if m_up is None:
                        break
                    total += m_up * pair(up, alpha)
                    k += 1
            mu_rho = tuple(a + b for a, b in zip(mu, rho))
            denom = lam_rho_norm - pair(mu_rho, mu_rho)
            if denom == 0:
                # |mu + rho| = |lam + rho| happens only on the Weyl orbit of
                # lam + rho (shifted), never at a weight below the highest
                # one, so the multiplicity is zero.
                continue
            m = 2 * total / denom
            if m.denominator != 1:
                raise AssertionError(f"non-integral multiplicity at {mu}")
            m = int(m)
            if m < 0:
                raise AssertionError(f"negative multiplicity at {mu}")
            if m:
                mults[mu] = m
                nxt.append(mu)
        level = nxt
    return mults


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Irrep:
    """A dominant weight enriched with its dimensions over C/R/H, field
    type, and kernel inside the center."""

    weight: Weight
    dim_c: int
    field: str
    dim_r: int
    dim_h: int | None
    kernel: CenterSubgroup

    def sort_key(self) -> tuple:
        return (self.dim_c, self.weight.coeffs)


def describe(w: Weight) -> Irrep:
    """Enrich a dominant weight to its full descriptor."""
    dim_c = dim_complex(w)
    ft = field_type(w)
    dim_r, dim_h = dims_over(w)
    return Irrep(w, dim_c, ft, dim_r, dim_h, rep_kernel(w))


def enumerate_irreps(t: SimpleType, max_dim: int) -> list[Irrep]:
    """All irreducible representations with complex dimension <= ``max_dim``,
    sorted by (complex dimension, coefficients).

    Completeness relies on strict monotonicity of the dimension in each
    coefficient, so the coefficient-wise search can prune at the frontier.
    """
    if max_dim < 1:
        raise ValueError("max_dim must be >= 1")
    n = t.rank
    zero = Weight(t, (0,) * n)
    found: list[Weight] = []
    seen = {zero.coeffs}
    stack = [zero]
    while stack:
        w = stack.pop()
        if dim_complex(w) > max_dim:
            continue
        found.append(w)
        for i in range(n):
            up = list(w.coeffs)
            up[i] += 1
            key = tuple(up)
            if key not in seen:
                seen.add(key)
                stack.append(Weight(t, key))
    out = [describe(w) for w in found]
    out.sort(key=Irrep.sort_key)
    return out


def real_irreps_up_to(t: SimpleType, max_real_dim: int) -> list[Irrep]:
    """One representative per conjugation orbit with real dimension
    <= ``max_real_dim`` (conjugate pairs collapsed, lexicographically
    greater weight kept, so e.g. the orbit {w1, wn} in the A family is
    represented by w1), sorted by (real dimension, coefficients)."""
    if max_real_dim < 1:
        raise ValueError("max_real_dim must be >= 1")
    out = []
    for irrep in enumerate_irreps(t, max_real_dim):
        cw = conjugate(irrep.weight)
        if cw.coeffs > irrep.weight.coeffs:
            continue  # the conjugate representative is kept instead
        if irrep.dim_r <= max_real_dim:
            out.append(irrep)
    out.sort(key=lambda r: (r.dim_r, r.weight.coeffs))
    return out
