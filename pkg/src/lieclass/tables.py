"""Bundled classification tables: loading, series expansion, signatures.

The package ships its reference tables as JSON files (one per table) in the
``fixtures`` directory; the ``LIECLASS_FIXTURES`` environment variable points
the loader at an alternative directory.  Rows describe groups by simple-type
specs such as ``["B", 3]`` or, for one-parameter series, ``["B", "n"]``
together with a ``range``; ranks written as linear expressions in one
variable ("2n-1") are evaluated exactly and the resulting types are pushed
through :func:`lieclass.cartan.canonicalize`, so a series row stated for
``SO(2n-2)`` lands on ``A3`` at ``n=4`` with its weights relabelled.
"""

from __future__ import annotations

import functools
import json
import os
import re
from pathlib import Path
from typing import Any, Iterator

from .cartan import Canonicalization, SimpleType, canonicalize

__all__ = [
    "FixtureError",
    "available_fixtures",
    "canonical_witness",
    "evaluate",
    "expand_rows",
    "expand_type",
    "fixtures_dir",
    "load_fixture",
    "natural_weight",
    "render_name",
    "row_signature",
]

ENV_VAR = "LIECLASS_FIXTURES"

#: fixture ids bundled with the package (kept in sync with the data files).
BUNDLED = (
    "modules-a",
    "modules-b",
    "modules-c",
    "modules-d",
    "modules-e6",
    "modules-e7",
    "modules-e8",
    "modules-f4",
    "modules-g2",
    "case1-simple",
    "case2-simple",
    "spheres",
    "semisimple-case1",
    "semisimple-case2",
    "case1-candidates",
    "case2-candidates",
    "sphere-candidates",
    "semisimple-candidates",
    "stiefel",
    "matrix-pairs",
    "a1-classes",
    "exceptional-subgroups",
    "curated",
    "atlas",
    "quadrangle",
)


class FixtureError(ValueError):
    """A fixture file is missing or malformed."""


def fixtures_dir() -> Path:
    """Directory holding the fixture JSON files."""
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).parent / "fixtures"


def available_fixtures() -> list[str]:
    """Fixture ids present in the active fixture directory."""
    root = fixtures_dir()
    if not root.is_dir():
        return []
    return sorted(p.stem for p in root.glob("*.json"))


@functools.lru_cache(maxsize=None)
def _load_path(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise FixtureError(f"no such fixture file: {path}") from None
    except json.JSONDecodeError as exc:
        raise FixtureError(f"malformed fixture {path}: {exc}") from None
    if not isinstance(data, dict):
        raise FixtureError(f"fixture {path} must be a JSON object")
    return data


def load_fixture(name: str) -> dict:
    """Load a fixture by id (no extension)."""
    if not re.fullmatch(r"[a-z0-9][a-z0-9-]*", name):
        raise FixtureError(f"invalid fixture id: {name!r}")
    return _load_path(str(fixtures_dir() / f"{name}.json"))


# ---------------------------------------------------------------------------
# Linear rank expressions
# ---------------------------------------------------------------------------

_EXPR = re.compile(r"\s*(?:(\d+)\s*\*?\s*)?([a-z])\s*(?:([+-])\s*(\d+))?\s*$")
_INT = re.compile(r"\s*([+-]?\d+)\s*$")


def evaluate(expr: int | str, env: dict[str, int] | None = None) -> int:
    """Evaluate an integer or a linear expression ("n", "2n-1", "n+3")."""
    if isinstance(expr, int):
        return expr
    m = _INT.match(expr)
    if m:
        return int(m.group(1))
    m = _EXPR.match(expr)
    if not m:
        raise FixtureError(f"cannot parse rank expression {expr!r}")
    coeff, var, sign, off = m.groups()
    if env is None or var not in env:
        raise FixtureError(f"expression {expr!r} needs a value for {var!r}")
    value = (int(coeff) if coeff else 1) * env[var]
    if sign:
        value += int(off) if sign == "+" else -int(off)
    return value


def expand_type(spec: list, env: dict[str, int] | None = None) -> Canonicalization:
    """Resolve a type spec ``[family, rank-or-expr]`` to a canonical type."""
    if not (isinstance(spec, (list, tuple)) and len(spec) == 2):
        raise FixtureError(f"bad type spec: {spec!r}")
    family = spec[0]
    rank = evaluate(spec[1], env)
    return canonicalize(family, rank)


def natural_weight(family: str, rank: int) -> tuple[SimpleType, tuple[int, ...]]:
    """Canonical type and highest weight of the natural module of the
    classical group named by (family, rank): C^{n+1} for A_n, R^{2n+1} for
    B_n, H^n for C_n, R^{2n} for D_n.  Rank-1 orthogonal groups get the
    3-dimensional module of A1; aliases (C2, D3) are relabelled."""
    if family == "B" and rank == 1:
        return SimpleType("A", 1), (2,)
    canon = canonicalize(family, rank)
    return canon.type, canon.relabel_coeffs((1,) + (0,) * (rank - 1))


# ---------------------------------------------------------------------------
# Witness normal form
# ---------------------------------------------------------------------------

Summand = tuple[tuple[int, ...], ...]
WitnessKey = tuple[Summand, ...]


def canonical_witness(
    factors: tuple[SimpleType, ...], summands: list | tuple
) -> tuple[tuple[SimpleType, ...], WitnessKey]:
    """Normal form of a module decomposition: factors sorted by type string,
    witness columns permuted along, summands sorted descending.  When two
    factors share a type, the column order maximising the summand tuple is
    chosen, making the form independent of factor labelling."""
    cleaned = [tuple(tuple(int(c) for c in col) for col in s) for s in summands]
    for s in cleaned:
        if len(s) != len(factors):
            raise FixtureError("witness summand width does not match factor count")
    order = sorted(range(len(factors)), key=lambda i: str(factors[i]))
    # among factor orderings with the same sorted type string, pick the one
    # giving the largest summand list
    best: tuple | None = None
    for perm in _type_preserving_perms(factors, order):
        key = tuple(sorted((tuple(s[i] for i in perm) for s in cleaned), reverse=True))
        if best is None or key > best[1]:
            best = (perm, key)
    assert best is not None
    perm, key = best
    return tuple(factors[i] for i in perm), key


def _type_preserving_perms(
    factors: tuple[SimpleType, ...], base: list[int]
) -> Iterator[list[int]]:
    """All orderings agreeing with ``base`` on type strings (swaps only
    among equal types).  Factor counts are at most 3, so brute force."""
    import itertools

    target = [str(factors[i]) for i in base]
    for perm in itertools.permutations(range(len(factors))):
        if [str(factors[i]) for i in perm] == target:
            yield list(perm)


# ---------------------------------------------------------------------------
# Row expansion
# ---------------------------------------------------------------------------


def render_name(spec: Any, env: dict[str, int] | None = None) -> str | None:
    """Resolve a display-name template: a literal string, a ``[prefix,
    size-expr]`` pair, or a list of such joined with " x "."""
    if spec is None:
        return None
    if isinstance(spec, str):
        return spec
    if (
        isinstance(spec, list)
        and len(spec) == 2
        and isinstance(spec[0], str)
        and isinstance(spec[1], (str, int))
    ):
        return f"{spec[0]}({evaluate(spec[1], env)})"
    if isinstance(spec, list):
        return " x ".join(render_name(part, env) or "?" for part in spec)
    raise FixtureError(f"bad name template: {spec!r}")


def _expand_witness(spec: Any, h_types: tuple[SimpleType, ...], h_specs: list, env):
    if spec is None:
        return None
    if isinstance(spec, dict) and "natural_padding" in spec:
        if len(h_types) != 1:
            raise FixtureError("natural_padding witness needs exactly one factor")
        family = h_specs[0][0]
        rank = evaluate(h_specs[0][1], env)
        stype, coeffs = natural_weight(family, rank)
        if stype != h_types[0]:
            raise FixtureError("natural module type mismatch in witness expansion")
        pad = int(spec["natural_padding"])
        zero: Summand = ((0,) * stype.rank,)
        return [ (coeffs,) ] + [zero] * pad
    if isinstance(spec, list):
        return [tuple(tuple(col) for col in s) for s in spec]
    raise FixtureError(f"bad witness spec: {spec!r}")


def _row_env_values(row: dict, max_rank: int) -> Iterator[dict[str, int] | None]:
    rng = row.get("range")
    if not rng:
        yield None
        return
    var = rng["var"]
    n = int(rng["min"])
    hard_max = rng.get("max")
    while hard_max is None or n <= int(hard_max):
        env = {var: n}
        total = sum(expand_type(spec, env).type.rank for spec in row["g"])
        if total > max_rank:
            if hard_max is None:
                return
        else:
            yield env
        n += 1
        if n > 400:  # safety against runaway ranges
            return


def expand_rows(fixture: dict, max_rank: int) -> list[dict]:
    """Expand every row of a loaded fixture up to the given total rank of G:
    series rows are instantiated once per admissible parameter value, types
    are canonicalised, rank expressions and name templates resolved.  Each
    concrete row gains ``g_types``/``h_types`` (tuples of SimpleType), a
    normalised ``witness`` (or None) and integer ``residual``."""
    out = []
    for row in fixture.get("rows", []):
        for env in _row_env_values(row, max_rank):
            out.append(_expand_row(row, env, max_rank))
    return [r for r in out if r is not None]


def _expand_row(row: dict, env: dict[str, int] | None, max_rank: int) -> dict | None:
    g_canon = [expand_type(spec, env) for spec in row["g"]]
    g_types = tuple(c.type for c in g_canon)
    if sum(t.rank for t in g_types) > max_rank:
        return None
    h_specs = row.get("h", [])
    h_types = tuple(expand_type(spec, env).type for spec in h_specs)
    witness = _expand_witness(row.get("witness"), h_types, h_specs, env)
    if witness is not None:
        h_types, witness_key = canonical_witness(h_types, witness)
    else:
        witness_key = None
        h_types = tuple(sorted(h_types, key=str))
    concrete = {
        "g_types": g_types,
        "h_types": h_types,
        "witness": witness_key,
        "residual": tuple(sorted(evaluate(x, env) for x in row.get("residual", []))),
        "case": row.get("case"),
        "verdict": row.get("verdict"),
        "exclusion": row.get("exclusion"),
        "pi2": row.get("pi2"),
        "centralizer": row.get("centralizer"),
        "display": row.get("display"),
        "multiplicity": int(row.get("multiplicity", 1)),
        "note": row.get("note"),
        "coincidence": row.get("coincidence"),
        "g_name": render_name(row.get("names", {}).get("g"), env),
        "h_name": render_name(row.get("names", {}).get("h"), env),
        "source_row": row,
        "env": env,
    }
    for key in ("matrix", "j_phi", "psi_arrangement", "h0", "k2_class"):
        if key in row:
            concrete[key] = row[key]
    return concrete


def row_signature(concrete: dict) -> tuple:
    """Hashable identity of a concrete row, used to match generated
    classification rows against table rows: group types, subgroup types,
    witness normal form (when present) and residual exponents."""
    return (
        tuple(str(t) for t in concrete["g_types"]),
        tuple(str(t) for t in concrete["h_types"]),
        concrete["witness"],
        tuple(concrete["residual"]),
    )
