"""JSON and text rendering of multiplicity maps.

JSON layout::

    {"kind": "irreps", "ambient_n": 4,
     "summands": [{"label": [[2], [1]], "multiplicity": 3}, ...]}

``kind`` is ``perm`` or ``irreps`` (label: list of partitions) or ``specht``
(label: one partition).
"""

from __future__ import annotations

import json
from typing import Any

from .labels import format_sequence, sequence, sorted_map
from .partitions import format_partition, partition

KINDS = ("perm", "irreps", "specht")
PREFIX = {"perm": "M~", "irreps": "V", "specht": "S"}


def _ordered(kind: str, mults: dict) -> dict:
    if kind == "specht":
        return {k: mults[k] for k in sorted(mults, reverse=True) if mults[k]}
    return sorted_map(mults)


def decomposition_to_json(mults: dict, n: int, kind: str) -> dict[str, Any]:
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    summands = []
    for key, c in _ordered(kind, mults).items():
        label = list(key) if kind == "specht" else [list(lam) for lam in key]
        summands.append({"label": label, "multiplicity": c})
    return {"kind": kind, "ambient_n": n, "summands": summands}


def decomposition_from_json(obj: dict[str, Any]) -> tuple[str, int, dict]:
    kind = obj.get("kind", "irreps")
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    mults: dict = {}
    for item in obj["summands"]:
        key = partition(item["label"]) if kind == "specht" else sequence(item["label"])
        mults[key] = mults.get(key, 0) + int(item["multiplicity"])
    return kind, int(obj["ambient_n"]), _ordered(kind, mults)


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2)


def format_label(key, kind: str) -> str:
    if kind == "specht":
        return PREFIX[kind] + format_partition(key)
    return PREFIX[kind] + format_sequence(key)


def format_sum(mults: dict, kind: str) -> str:
    """``2V((2)|(1)) + V((2,2))`` style one-line direct sum."""
    terms = []
    for key, c in _ordered(kind, mults).items():
        terms.append(("" if c == 1 else str(c)) + format_label(key, kind))
    return " + ".join(terms) if terms else "0"


def format_lines(mults: dict, kind: str) -> list[str]:
    return [f"{c:>6}  {format_label(key, kind)}" for key, c in _ordered(kind, mults).items()]
