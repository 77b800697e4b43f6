"""Smith normal form over the integers, and finite(ly generated) abelian
group descriptors built from it.

The reduction uses exact integer arithmetic with a deterministic pivot rule:
the entry of smallest nonzero absolute value, ties broken by smallest row
index, then smallest column index.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

__all__ = ["AbelianGroup", "cokernel", "matrix_rank", "smith_invariants"]

IntMatrix = list[list[int]]


def _pivot(m: IntMatrix, start: int) -> tuple[int, int] | None:
    """Position of the smallest-|value| nonzero entry in the trailing block."""
    best: tuple[int, int, int] | None = None
    for i in range(start, len(m)):
        for j in range(start, len(m[0])):
            v = abs(m[i][j])
            if v and (best is None or v < best[0]):
                best = (v, i, j)
    return None if best is None else (best[1], best[2])


def smith_invariants(matrix) -> tuple[int, ...]:
    """Invariant factors ``d_1 | d_2 | ...`` of an integer matrix.

    The result has length ``min(rows, cols)``; zero factors come last.

    >>> smith_invariants([[3, 1], [0, 4]])
    (1, 12)
    >>> smith_invariants([[2, 0], [0, 3]])
    (1, 6)
    >>> smith_invariants([[11]])
    (11,)
    """
    m = [list(map(int, row)) for row in matrix]
    if not m or not m[0]:
        return ()
    rows, cols = len(m), len(m[0])
    if any(len(row) != cols for row in m):
        raise ValueError("ragged matrix")
    size = min(rows, cols)
    diag: list[int] = []
    for step in range(size):
        while True:
            pos = _pivot(m, step)
            if pos is None:
                break
            pi, pj = pos
            m[step], m[pi] = m[pi], m[step]
            for row in m:
                row[step], row[pj] = row[pj], row[step]
            pivot = m[step][step]
            # clear the pivot column and row by Euclidean steps
            dirty = False
            for i in range(step + 1, rows):
                q = m[i][step] // pivot
                if q:
                    m[i] = [a - q * b for a, b in zip(m[i], m[step])]
                if m[i][step]:
                    dirty = True
            for j in range(step + 1, cols):
                q = m[step][j] // pivot
                if q:
                    for row in m:
                        row[j] -= q * row[step]
                if m[step][j]:
                    dirty = True
            if dirty:
                continue
            # enforce divisibility: fold in any entry the pivot misses
            bad = next(
                (
                    (i, j)
                    for i in range(step + 1, rows)
                    for j in range(step + 1, cols)
                    if m[i][j] % pivot
                ),
                None,
            )
            if bad is None:
                break
            m[step] = [a + b for a, b in zip(m[step], m[bad[0]])]
        pivot = m[step][step]
        diag.append(abs(pivot))
        if pivot == 0:
            break
    diag += [0] * (size - len(diag))
    nonzero = [d for d in diag if d]
    return tuple(nonzero) + (0,) * (size - len(nonzero))


def matrix_rank(matrix) -> int:
    """Rank of an integer matrix (number of nonzero invariant factors)."""
    return sum(1 for d in smith_invariants(matrix) if d)


@dataclass(frozen=True)
class AbelianGroup:
    """A finitely generated abelian group in invariant-factor form.

    ``torsion`` is a divisibility chain ``d_1 | d_2 | ...`` of integers
    >= 2 and ``free_rank`` counts the infinite cyclic summands.

    >>> str(AbelianGroup((), 0))
    '0'
    >>> str(AbelianGroup((8,), 0))
    'Z/8'
    >>> str(AbelianGroup((2, 2), 0))
    'Z/2+Z/2'
    >>> str(AbelianGroup((3,), 1))
    'Z+Z/3'
    """

    torsion: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self) -> None:
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion orders must be >= 2")
        if self.free_rank < 0:
            raise ValueError("free rank must be >= 0")

    @classmethod
    def from_orders(cls, orders, free_rank: int = 0) -> "AbelianGroup":
        """Normalise an unordered product of cyclic groups.

        >>> AbelianGroup.from_orders([2, 4, 3]).torsion
        (2, 12)
        """
        primary: dict[int, list[int]] = {}
        for n in orders:
            n = int(n)
            if n < 1:
                raise ValueError("cyclic orders must be positive")
            p = 2
            while n > 1:
                if n % p == 0:
                    q = 1
                    while n % p == 0:
                        n //= p
                        q *= p
                    primary.setdefault(p, []).append(q)
                p += 1 if p == 2 else 2
        for powers in primary.values():
            powers.sort(reverse=True)
        depth = max((len(v) for v in primary.values()), default=0)
        chain = []
        for k in range(depth):
            d = 1
            for powers in primary.values():
                if k < len(powers):
                    d *= powers[k]
            chain.append(d)
        return cls(tuple(reversed(chain)), free_rank)

    @property
    def order(self) -> int | None:
        """Group order, or ``None`` if infinite."""
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and not self.free_rank

    def exponent(self) -> int:
        """The exponent of the torsion part (1 if torsion-free)."""
        return lcm(*self.torsion) if self.torsion else 1

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.torsion]
        return "+".join(parts) if parts else "0"


def cokernel(matrix, ambient_rank: int | None = None) -> AbelianGroup:
    """Cokernel of the map represented by an integer matrix (rows index the
    target's coordinates).  ``ambient_rank`` overrides the row count when the
    matrix is empty."""
    m = [list(row) for row in matrix]
    rows = len(m) if m else (ambient_rank or 0)
    if not m or not m[0]:
        return AbelianGroup((), rows)
    inv = smith_invariants(m)
    torsion = tuple(d for d in inv if d > 1)
    free = rows - sum(1 for d in inv if d)
    return AbelianGroup(torsion, free)
