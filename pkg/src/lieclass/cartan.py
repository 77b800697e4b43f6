"""Static structure data for the nine compact simple Lie families.

Cartan matrices, positive roots, fundamental-weight geometry, cohomology
exponents, centers and their characters, the conjugation involution on
fundamental weights, and the real/quaternionic indicator ``beta`` for
conjugation-fixed fundamental weights.

Conventions
-----------
* Families ``A``, ``B``, ``C``, ``D`` with rank bounds A: n>=1, B: n>=2,
  C: n>=2, D: n>=3, and the fixed-rank exceptional families ``E6``, ``E7``,
  ``E8``, ``F4``, ``G2``.  Low-rank coincidences are normalised by
  :func:`canonicalize` (C2 -> B2, D3 -> A3, B1/C1 -> A1; D2 is rejected).
* Dynkin nodes are numbered 1..rank.  For B_n the short root is node ``n``;
  for C_n the long root is node ``n``; F4 is the chain 1-2-3-4 with nodes
  1, 2 short; G2 has node 1 short.  E6 is the chain 1-2-3-4-5 with node 6
  attached to node 3; E7 the chain 1-..-6 with node 7 on node 4; E8 the
  chain 1-..-7 with node 8 on node 5.
* The Cartan matrix is ``A[i][j] = 2<a_i, a_j>/<a_i, a_i>``; the inner
  product is normalised so that long roots have squared length 2.
* All arithmetic is exact: inner products are :class:`fractions.Fraction`,
  roots of unity are rationals mod 1.  No floats.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import NamedTuple

__all__ = [
    "SimpleType",
    "Canonicalization",
    "CenterSpec",
    "Root",
    "adjoint_weight",
    "all_canonical_types",
    "beta_fundamental",
    "canonicalize",
    "cartan_matrix",
    "center",
    "center_character",
    "center_coweight",
    "exponents",
    "fundamental_dim",
    "galois_involution",
    "gram_fundamental",
    "group_dimension",
    "highest_root",
    "inverse_cartan",
    "positive_roots",
    "symmetrizer",
]

_EXCEPTIONAL_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True, order=True)
class SimpleType:
    """A compact simple Lie type (family and rank).

    Construction enforces the rank bounds but does *not* normalise the
    low-rank coincidences; ``SimpleType("C", 2)`` is a valid, non-canonical
    spelling of B2.  Use :func:`canonicalize` to normalise.
    """

    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, rank = self.family, self.rank
        if fam in _EXCEPTIONAL_RANK:
            if rank != _EXCEPTIONAL_RANK[fam]:
                raise ValueError(f"{fam} has fixed rank {_EXCEPTIONAL_RANK[fam]}, got {rank}")
        elif fam in _MIN_RANK:
            if fam == "D" and rank == 2:
                raise ValueError("D2 is not simple (it splits as A1 x A1)")
            if rank < _MIN_RANK[fam]:
                raise ValueError(f"rank {rank} is out of range for family {fam}")
        else:
            raise ValueError(f"unknown family {fam!r}")

    @property
    def is_canonical(self) -> bool:
        return canonicalize(self.family, self.rank).type == self

    def __str__(self) -> str:
        return self.family if self.family in _EXCEPTIONAL_RANK else f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Canonicalization:
    """Result of normalising a (family, rank) pair.

    ``alias`` records the identification applied (``None`` if the input was
    already canonical).  ``weight_relabel`` maps node ``i`` of the input
    diagram to node ``weight_relabel[i-1]`` of the canonical diagram, so
    weight coefficients can be transcribed between the two labelings.
    """

    type: SimpleType
    alias: str | None
    weight_relabel: tuple[int, ...]

    def relabel_coeffs(self, coeffs: tuple[int, ...]) -> tuple[int, ...]:
        """Transcribe weight coefficients from input labels to canonical ones."""
        if len(coeffs) != len(self.weight_relabel):
            raise ValueError("coefficient count does not match the input rank")
        out = [0] * self.type.rank
        for i, c in enumerate(coeffs):
            out[self.weight_relabel[i] - 1] = c
        return tuple(out)


def canonicalize(family: str, rank: int) -> Canonicalization:
    """Normalise a (family, rank) pair to its canonical simple type.

    C2 -> B2 (swapping the two node labels), D3 -> A3, B1/C1 -> A1.
    D2 and non-positive ranks are rejected.  Idempotent on canonical input.
    """
    if rank <= 0:
        raise ValueError(f"rank must be positive, got {rank}")
    if family == "D" and rank == 2:
        raise ValueError("D2 is not simple (it splits as A1 x A1)")
    if family in ("B", "C") and rank == 1:
        return Canonicalization(SimpleType("A", 1), f"{family}1=A1", (1,))
    if family == "C" and rank == 2:
        # so_5 = sp_2; the two diagram nodes trade places.
        return Canonicalization(SimpleType("B", 2), "C2=B2", (2, 1))
    if family == "D" and rank == 3:
        # so_6 = su_4; node 1 becomes the middle node, the branch nodes
        # become the two ends (tie-break: node 2 -> node 1).
        return Canonicalization(SimpleType("A", 3), "D3=A3", (2, 1, 3))
    stype = SimpleType(family, rank)  # validates bounds
    return Canonicalization(stype, None, tuple(range(1, rank + 1)))


def _require_canonical(t: SimpleType) -> None:
    if not t.is_canonical:
        raise ValueError(f"{t} is not canonical; call canonicalize() first")


# ---------------------------------------------------------------------------
# Cartan matrix, symmetrizer, fundamental-weight geometry
# ---------------------------------------------------------------------------

Matrix = tuple[tuple[int, ...], ...]
FMatrix = tuple[tuple[Fraction, ...], ...]


@functools.lru_cache(maxsize=None)
def cartan_matrix(t: SimpleType) -> Matrix:
    """The Cartan matrix ``A[i][j] = 2<a_i,a_j>/<a_i,a_i>`` (0-indexed rows)."""
    _require_canonical(t)
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    fam = t.family
    if fam in ("A", "B", "C"):
        for i in range(1, n):
            bond(i, i + 1)
        if fam == "B" and n >= 2:
            bond(n - 1, n, aij=-1, aji=-2)  # node n short
        if fam == "C":
            bond(n - 1, n, aij=-2, aji=-1)  # node n long
    elif fam == "D":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 2, n)
    elif fam in ("E6", "E7", "E8"):
        chain = n - 1
        for i in range(1, chain):
            bond(i, i + 1)
        branch = {"E6": 3, "E7": 4, "E8": 5}[fam]
        bond(branch, n)
    elif fam == "F4":
        bond(1, 2)
        bond(2, 3, aij=-2, aji=-1)  # nodes 1, 2 short
        bond(3, 4)
    elif fam == "G2":
        bond(1, 2, aij=-3, aji=-1)  # node 1 short
    return tuple(tuple(row) for row in a)


@functools.lru_cache(maxsize=None)
def symmetrizer(t: SimpleType) -> tuple[Fraction, ...]:
    """``d_i = <a_i,a_i>/2``, normalised so long roots have ``d = 1``."""
    _require_canonical(t)
    n = t.rank
    one, half = Fraction(1), Fraction(1, 2)
    match t.family:
        case "A" | "D" | "E6" | "E7" | "E8":
            return (one,) * n
        case "B":
            return (one,) * (n - 1) + (half,)
        case "C":
            return (half,) * (n - 1) + (one,)
        case "F4":
            return (half, half, one, one)
        case "G2":
            return (Fraction(1, 3), one)
    raise AssertionError(t.family)


def _invert(rows: list[list[Fraction]]) -> FMatrix:
    """Exact Gauss-Jordan inverse of a small square matrix."""
    n = len(rows)
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@functools.lru_cache(maxsize=None)
def inverse_cartan(t: SimpleType) -> FMatrix:
    """Exact inverse of the Cartan matrix."""
    a = cartan_matrix(t)
    return _invert([[Fraction(x) for x in row] for row in a])


@functools.lru_cache(maxsize=None)
def gram_fundamental(t: SimpleType) -> FMatrix:
    """Gram matrix ``G[i][j] = <w_i, w_j>`` of the fundamental weights."""
    d = symmetrizer(t)
    ainv = inverse_cartan(t)
    n = t.rank
    return tuple(tuple(d[i] * ainv[i][j] for j in range(n)) for i in range(n))


# ---------------------------------------------------------------------------
# Positive roots
# ---------------------------------------------------------------------------


class Root(NamedTuple):
    """A positive root in simple-root (``root``) and fundamental-weight
    (``fund``) coordinates; ``height`` is the sum of root coordinates."""

    root: tuple[int, ...]
    fund: tuple[int, ...]
    height: int


@functools.lru_cache(maxsize=None)
def positive_roots(t: SimpleType) -> tuple[Root, ...]:
    """All positive roots, sorted by (height, root coordinates).

    Built level by level from the simple roots: ``b + a_j`` is a root iff
    the down-string length ``q`` through ``b`` in direction ``a_j`` exceeds
    ``<b, a_j^v>``, which is computable because all lower levels are known.
    """
    _require_canonical(t)
    a = cartan_matrix(t)
    n = t.rank

    def fund(c: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sum(a[k][i] * c[i] for i in range(n)) for k in range(n))

    known: set[tuple[int, ...]] = set()
    out: list[Root] = []
    frontier = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    height = 1
    while frontier:
        for c in frontier:
            known.add(c)
            out.append(Root(c, fund(c), height))
        nxt: set[tuple[int, ...]] = set()
        for c in frontier:
            f = fund(c)
            for j in range(n):
                q = 0
                down = list(c)
                while True:
                    down[j] -= 1
                    if tuple(down) in known:
                        q += 1
                    else:
                        break
                if q - f[j] >= 1:
                    up = list(c)
                    up[j] += 1
                    nxt.add(tuple(up))
        frontier = sorted(nxt)
        height += 1
    out.sort(key=lambda r: (r.height, r.root))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def highest_root(t: SimpleType) -> Root:
    """The unique root of maximal height."""
    roots = positive_roots(t)
    top = max(r.height for r in roots)
    candidates = [r for r in roots if r.height == top]
    if len(candidates) != 1:
        raise AssertionError(f"highest root of {t} is not unique")
    return candidates[0]


def adjoint_weight(t: SimpleType) -> tuple[int, ...]:
    """Fundamental-weight coefficients of the adjoint representation."""
    return highest_root(t).fund


# ---------------------------------------------------------------------------
# Exponents and dimension
# ---------------------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def exponents(t: SimpleType) -> tuple[int, ...]:
    """Degrees (sorted, with multiplicity) of the primitive rational
    cohomology generators of the compact group of type ``t``.

    All entries are odd and >= 3; there are ``rank`` of them and they sum
    to the group dimension.
    """
    _require_canonical(t)
    n = t.rank
    match t.family:
        case "A":
            return tuple(range(3, 2 * n + 2, 2))
        case "B" | "C":
            return tuple(range(3, 4 * n, 4))
        case "D":
            return tuple(sorted(list(range(3, 4 * n - 4, 4)) + [2 * n - 1]))
        case "E6":
            return (3, 9, 11, 15, 17, 23)
        case "E7":
            return (3, 11, 15, 19, 23, 27, 35)
        case "E8":
            return (3, 15, 23, 27, 35, 39, 47, 59)
        case "F4":
            return (3, 11, 15, 23)
        case "G2":
            return (3, 11)
    raise AssertionError(t.family)


def group_dimension(t: SimpleType) -> int:
    """Real dimension of the compact group (equals the sum of exponents)."""
    _require_canonical(t)
    n = t.rank
    match t.family:
        case "A":
            return n * (n + 2)
        case "B" | "C":
            return n * (2 * n + 1)
        case "D":
            return n * (2 * n - 1)
        case "E6":
            return 78
        case "E7":
            return 133
        case "E8":
            return 248
        case "F4":
            return 52
        case "G2":
            return 14
    raise AssertionError(t.family)


# ---------------------------------------------------------------------------
# Center, center characters, conjugation, beta indicator
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CenterSpec:
    """Center of the simply connected group of a simple type.

    ``orders`` lists the cyclic factor orders (empty for trivial center,
    one entry for cyclic, ``(2, 2)`` for the Klein group), and
    ``generator_nodes`` the Dynkin node whose coweight exponential realises
    each generator.
    """

    orders: tuple[int, ...]
    generator_nodes: tuple[int, ...]

    @property
    def structure(self) -> str:
        if not self.orders:
            return "trivial"
        if len(self.orders) == 1:
            return f"cyclic({self.orders[0]})"
        return "klein"

    @property
    def order(self) -> int:
        out = 1
        for k in self.orders:
            out *= k
        return out

    def elements(self) -> list[tuple[int, ...]]:
        """All elements, as exponent tuples over the generators."""
        out: list[tuple[int, ...]] = [()]
        for k in self.orders:
            out = [e + (j,) for e in out for j in range(k)]
        return out


@functools.lru_cache(maxsize=None)
def center(t: SimpleType) -> CenterSpec:
    """Center of the simply connected group of type ``t``."""
    _require_canonical(t)
    n = t.rank
    match t.family:
        case "A":
            return CenterSpec((n + 1,), (n,))
        case "B":
            return CenterSpec((2,), (1,))
        case "C":
            return CenterSpec((2,), (n,))
        case "D":
            if n % 2 == 1:
                return CenterSpec((4,), (n - 1,))
            if n % 4 == 0:
                return CenterSpec((2, 2), (n - 1, n))
            return CenterSpec((2, 2), (n, n - 1))
        case "E6":
            return CenterSpec((3,), (1,))
        case "E7":
            return CenterSpec((2,), (7,))
        case _:
            return CenterSpec((), ())


def center_coweight(t: SimpleType, generator: int) -> tuple[Fraction, ...]:
    """Exact pairing values ``<w_i, X>`` of all fundamental weights with the
    coweight ``X`` realising center generator number ``generator`` (0-based).

    These are not reduced mod 1; use :func:`center_character` for the
    rotation numbers.
    """
    spec = center(t)
    node = spec.generator_nodes[generator]
    return inverse_cartan(t)[node - 1]


def center_character(t: SimpleType, i: int) -> tuple[Fraction, ...]:
    """Rotation numbers (in Q/Z) of each center generator acting on the
    irreducible representation with highest weight ``w_i`` (1-based ``i``)."""
    _require_canonical(t)
    if not 1 <= i <= t.rank:
        raise ValueError(f"fundamental index {i} out of range for {t}")
    spec = center(t)
    out = []
    for g in range(len(spec.orders)):
        x = center_coweight(t, g)[i - 1]
        out.append(x - (x.numerator // x.denominator))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def galois_involution(t: SimpleType) -> tuple[int, ...]:
    """The conjugation involution on fundamental-weight indices (1-based
    images): ``sigma[i-1]`` is the index of the conjugate of ``w_i``."""
    _require_canonical(t)
    n = t.rank
    sigma = list(range(1, n + 1))
    if t.family == "A":
        sigma = [n + 1 - i for i in sigma]
    elif t.family == "D" and n % 2 == 1:
        sigma[n - 2], sigma[n - 1] = n, n - 1
    elif t.family == "E6":
        sigma = [5, 4, 3, 2, 1, 6]
    return tuple(sigma)


def beta_fundamental(t: SimpleType, i: int) -> str:
    """Real/quaternionic indicator (``"R"`` or ``"H"``) of the conjugation-
    fixed fundamental weight ``w_i``.

    Raises :class:`ValueError` for a weight that is not conjugation-fixed
    (such a weight is of complex type and has no indicator).
    """
    _require_canonical(t)
    if not 1 <= i <= t.rank:
        raise ValueError(f"fundamental index {i} out of range for {t}")
    if galois_involution(t)[i - 1] != i:
        raise ValueError(f"w_{i} of {t} is not conjugation-fixed (complex type)")
    n = t.rank
    match t.family:
        case "A":  # only the middle node of odd rank is fixed
            return "R" if (n + 1) % 4 == 0 else "H"
        case "B":
            if i < n:
                return "R"
            return "R" if n % 4 in (0, 3) else "H"
        case "C":
            return "H" if i % 2 == 1 else "R"
        case "D":
            if i <= n - 2:
                return "R"
            return "R" if n % 4 == 0 else "H"
        case "E7":
            return "H" if i in (1, 3, 7) else "R"
        case _:  # E6 fixed nodes (3 and 6), E8, F4, G2
            return "R"


def fundamental_dim(t: SimpleType, i: int) -> int:
    """Closed-form complex dimension of the ``i``-th fundamental
    representation (1-based ``i``)."""
    _require_canonical(t)
    if not 1 <= i <= t.rank:
        raise ValueError(f"fundamental index {i} out of range for {t}")
    n = t.rank
    match t.family:
        case "A":
            return comb(n + 1, i)
        case "B":
            return 2**n if i == n else comb(2 * n + 1, i)
        case "C":
            return comb(2 * n, i) - (comb(2 * n, i - 2) if i >= 2 else 0)
        case "D":
            return 2 ** (n - 1) if i >= n - 1 else comb(2 * n, i)
        case "E6":
            return (27, 351, 2925, 351, 27, 78)[i - 1]
        case "E7":
            return (56, 1539, 27664, 365750, 8645, 133, 912)[i - 1]
        case "E8":
            return (248, 30380, 2450240, 146325270, 6899079264, 6696000, 3875, 147250)[i - 1]
        case "F4":
            return (26, 273, 1274, 52)[i - 1]
        case "G2":
            return (7, 14)[i - 1]
    raise AssertionError(t.family)


def all_canonical_types(max_rank: int) -> list[SimpleType]:
    """Every canonical simple type of rank <= ``max_rank``, sorted."""
    out: list[SimpleType] = []
    for n in range(1, max_rank + 1):
        out.append(SimpleType("A", n))
        if n >= 2:
            out.append(SimpleType("B", n))
        if n >= 3:
            out.append(SimpleType("C", n))
        if n >= 4:
            out.append(SimpleType("D", n))
    for fam, rank in _EXCEPTIONAL_RANK.items():
        if rank <= max_rank:
            out.append(SimpleType(fam, rank))
    return sorted(out)
