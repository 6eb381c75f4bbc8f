"""JSON file formats for rings, characters, modules, groups and certificates.

All integer data round-trips bit-exactly; floats are written with 12
significant digits, so reloading agrees to better than 1e-12 relative.
Character and module files carry the content hash of their ring so that
mismatched inputs are rejected early.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

import numpy as np

from .chars import DimChar
from .common import StructuralError
from .fusion import FusionRing
from .groups import GroupTable
from .nimrep import NimRep

_HASH_RE = re.compile(r"^[0-9a-f]{12}$")


def round12(x: float) -> float:
    """Clamp a float to 12 significant digits (the printing precision)."""
    return float(f"{float(x):.12g}")


def round12_tree(data):
    """Apply :func:`round12` to every float in a nested JSON-like structure."""
    if isinstance(data, bool) or isinstance(data, int) or data is None:
        return data
    if isinstance(data, float):
        return round12(data)
    if isinstance(data, (list, tuple)):
        return [round12_tree(x) for x in data]
    if isinstance(data, dict):
        return {k: round12_tree(v) for k, v in data.items()}
    return data


def complex_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def dumps(data) -> str:
    """Canonical one-document JSON text: fixed key order, rounded floats."""
    return json.dumps(round12_tree(data), separators=(", ", ": "), sort_keys=False)


def save_json(data, path) -> None:
    Path(path).write_text(dumps(data) + "\n", encoding="utf-8")


def _load_dict(path) -> dict:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise StructuralError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise StructuralError(f"{path}: expected a JSON object")
    return data


def _require(data: dict, keys: list[str], what: str) -> None:
    missing = [k for k in keys if k not in data]
    if missing:
        raise StructuralError(f"{what} file is missing keys: {', '.join(missing)}")


# -- rings --------------------------------------------------------------

def ring_to_dict(ring: FusionRing) -> dict:
    return ring.to_dict()


def ring_from_dict(data: dict) -> FusionRing:
    _require(data, ["rank", "labels", "unit", "dual", "N"], "ring")
    return FusionRing(data["rank"], data["labels"], data["unit"], data["dual"], data["N"])


def save_ring(ring: FusionRing, path) -> None:
    save_json(ring_to_dict(ring), path)


def load_ring(path) -> FusionRing:
    return ring_from_dict(_load_dict(path))


def _check_ring_field(value, ring: FusionRing, what: str) -> None:
    # hash-shaped references are verified; free-form labels are informational
    if isinstance(value, str) and _HASH_RE.match(value) and value != ring.content_hash():
        raise StructuralError(
            f"{what} file references ring {value}, expected {ring.content_hash()}"
        )


# -- characters ---------------------------------------------------------

def char_to_dict(char: DimChar) -> dict:
    return {
        "ring": char.ring.content_hash(),
        "d": [complex_pair(z) for z in char.d],
    }


def char_from_dict(data: dict, ring: FusionRing) -> DimChar:
    _require(data, ["ring", "d"], "character")
    _check_ring_field(data["ring"], ring, "character")
    pairs = data["d"]
    try:
        values = np.array([complex(re, im) for re, im in pairs])
    except (TypeError, ValueError) as exc:
        raise StructuralError(f"bad character entries: {exc}") from None
    return DimChar(ring, values)


def save_char(char: DimChar, path) -> None:
    save_json(char_to_dict(char), path)


def load_char(path, ring: FusionRing) -> DimChar:
    return char_from_dict(_load_dict(path), ring)


# -- modules ------------------------------------------------------------

def module_to_dict(rep: NimRep) -> dict:
    return {
        "ring": rep.ring.content_hash(),
        "module_rank": rep.module_rank,
        "M": rep.M.tolist(),
    }


def module_from_dict(data: dict, ring: FusionRing) -> NimRep:
    _require(data, ["ring", "module_rank", "M"], "module")
    _check_ring_field(data["ring"], ring, "module")
    return NimRep(ring, data["module_rank"], data["M"])


def save_module(rep: NimRep, path) -> None:
    save_json(module_to_dict(rep), path)


def load_module(path, ring: FusionRing) -> NimRep:
    return module_from_dict(_load_dict(path), ring)


# -- groups -------------------------------------------------------------

def group_to_dict(table: GroupTable) -> dict:
    return table.to_dict()


def group_from_dict(data: dict) -> GroupTable:
    _require(data, ["order", "mul"], "group")
    return GroupTable(data["order"], data["mul"])


def save_group(table: GroupTable, path) -> None:
    save_json(group_to_dict(table), path)


def load_group(path) -> GroupTable:
    return group_from_dict(_load_dict(path))
