"""Exact solver for the sequential inspection game.

Thin pythonic wrapper over the C++ core: specs go in as dicts, results come
back as dicts, and every exact quantity can be lifted to fractions.Fraction
with `frac`.
"""

from __future__ import annotations

import json as _json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Union

try:
    from . import _inspectgame as _core
except ImportError:  # build-tree layout: extension next to the package
    import _inspectgame as _core  # type: ignore

__version__ = "1.0.0"

__all__ = [
    "binom",
    "exploitability",
    "frac",
    "leadership",
    "make_spec",
    "oracle_table",
    "s_beta",
    "schedule",
    "simulate",
    "solve",
    "t_value",
    "verify",
]

RationalLike = Union[int, str, Fraction]


def frac(value: Any) -> Fraction:
    """Lifts a wire rational ({"num": ..., "den": ...} or a string) to Fraction."""
    if isinstance(value, dict):
        return Fraction(int(value["num"]), int(value["den"]))
    if isinstance(value, Fraction):
        return value
    return Fraction(str(value))


def _wire_rational(value: RationalLike) -> Dict[str, str]:
    f = value if isinstance(value, Fraction) else Fraction(str(value))
    return {"num": str(f.numerator), "den": str(f.denominator)}


def make_spec(
    n: int,
    m: int,
    k: int,
    b: RationalLike,
    rewards: List[RationalLike],
    variant: str = "zero_sum",
    a: Optional[RationalLike] = None,
    caught_costs: Optional[List[RationalLike]] = None,
) -> Dict[str, Any]:
    """Builds a spec dict; rewards are first-violation-first (rewards[0] = r_k)."""
    spec: Dict[str, Any] = {
        "variant": variant,
        "n": n,
        "m": m,
        "k": k,
        "b": _wire_rational(b),
        "rewards": [_wire_rational(r) for r in rewards],
    }
    if a is not None:
        spec["a"] = _wire_rational(a)
    if caught_costs is not None:
        spec["caught_costs"] = [_wire_rational(c) for c in caught_costs]
    return spec


def _dumps(spec: Dict[str, Any]) -> str:
    return _json.dumps(spec)


def solve(spec: Dict[str, Any], full_table: bool = False) -> Dict[str, Any]:
    return _json.loads(_core.solve_json(_dumps(spec), full_table))


def schedule(spec: Dict[str, Any]) -> Dict[str, Any]:
    return _json.loads(_core.schedule_json(_dumps(spec)))


def oracle_table(spec: Dict[str, Any]) -> Dict[str, Any]:
    return _json.loads(_core.oracle_table_json(_dumps(spec)))


def leadership(spec: Dict[str, Any]) -> Dict[str, Any]:
    return _json.loads(_core.leadership_json(_dumps(spec)))


def verify(spec: Dict[str, Any]) -> Dict[str, Any]:
    return _json.loads(_core.verify_json(_dumps(spec)))


def simulate(
    spec: Dict[str, Any],
    trials: int,
    seed: int,
    info_mode: str = "informed",
    profile: str = "",
) -> Dict[str, Any]:
    return _json.loads(_core.simulate_json(_dumps(spec), trials, seed, info_mode, profile))


def exploitability(spec: Dict[str, Any], info_mode: str = "informed") -> Dict[str, Fraction]:
    raw = _json.loads(_core.exploitability_json(_dumps(spec), info_mode))
    return {key: frac(value) for key, value in raw.items()}


def binom(n: int, k: int) -> int:
    return int(_core.binom(n, k))


def s_beta(n: int, m: int, beta: RationalLike) -> Fraction:
    return frac(_core.s_beta(n, m, str(beta)))


def t_value(n: int, m: int, rewards: List[RationalLike]) -> Fraction:
    return frac(_core.t_value(n, m, [str(r) for r in rewards]))
