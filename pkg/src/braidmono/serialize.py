"""JSON round-tripping for braids, factorizations, presentations and local data.

Braids are ``{"strands": d, "letters": [...]}``; parsers also accept the
text form ``"s1 s2^-1 s1"`` wherever the strand count is known.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .braid import BraidWord
from .errors import ValidationError
from .factorization import Factorization
from .singular import Branch, LocalPointData
from .zvk import GroupPresentation


def dumps(obj: Any) -> str:
    """Deterministic JSON text for any supported object or plain JSON value."""
    return json.dumps(to_json(obj), indent=2, sort_keys=True) + "\n"


def to_json(obj: Any) -> Any:
    if isinstance(obj, BraidWord):
        return {"strands": obj.strands, "letters": list(obj.letters)}
    if isinstance(obj, Factorization):
        return {
            "strands": obj.strands,
            "marked": obj.marked,
            "entries": [to_json(e) for e in obj.entries],
            "labels": list(obj.labels),
        }
    if isinstance(obj, GroupPresentation):
        return {"generators": list(obj.generators), "relators": [list(r) for r in obj.relators]}
    if isinstance(obj, LocalPointData):
        return {
            "point_type": obj.point_type,
            "mu": obj.mu,
            "axis_mult": list(obj.axis_mult),
            "branches": [
                {"mu": b.mu, "axis_mult": list(b.axis_mult), "components": b.components}
                for b in obj.branches
            ],
            "intersections": [[i, j, v] for (i, j), v in sorted(obj.intersections.items())],
        }
    if isinstance(obj, dict):
        return {k: to_json(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_json(v) for v in obj]
    return obj


def _require(data: Any, keys: tuple[str, ...], what: str) -> None:
    if not isinstance(data, dict):
        raise ValidationError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in data]
    if missing:
        raise ValidationError(f"{what} is missing {', '.join(missing)}")


def _int_list(value: Any, what: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise ValidationError(f"{what} must be a list of integers")
    return tuple(value)


def braid_from_json(data: Any, strands: int | None = None) -> BraidWord:
    if isinstance(data, str):
        if strands is None:
            raise ValidationError("text braids need a known strand count")
        return BraidWord.parse(data, strands)
    if isinstance(data, list):
        if strands is None:
            raise ValidationError("bare letter lists need a known strand count")
        return BraidWord(strands, _int_list(data, "braid letters"))
    _require(data, ("strands", "letters"), "braid")
    b = BraidWord(data["strands"], _int_list(data["letters"], "braid letters"))
    if strands is not None and b.strands != strands:
        raise ValidationError(f"braid on {b.strands} strands where {strands} are expected")
    return b


def factorization_from_json(data: Any) -> Factorization:
    _require(data, ("strands", "entries"), "factorization")
    d = data["strands"]
    if not isinstance(d, int) or d < 1:
        raise ValidationError("factorization strands must be a positive integer")
    entries = tuple(braid_from_json(e, d) for e in data["entries"])
    labels = data.get("labels") or ()
    if not all(x is None or isinstance(x, str) for x in labels):
        raise ValidationError("labels must be strings or null")
    return Factorization(d, entries, bool(data.get("marked", False)), tuple(labels))


def presentation_from_json(data: Any) -> GroupPresentation:
    _require(data, ("generators", "relators"), "presentation")
    gens = data["generators"]
    if not all(isinstance(g, str) for g in gens):
        raise ValidationError("generator names must be strings")
    rels = tuple(_int_list(r, "relator") for r in data["relators"])
    for r in rels:
        if any(x == 0 or abs(x) > len(gens) for x in r):
            raise ValidationError(f"relator {list(r)} refers to a missing generator")
    return GroupPresentation(tuple(gens), rels)


def local_data_from_json(data: Any) -> LocalPointData:
    _require(data, ("point_type", "mu", "axis_mult"), "local point data")
    branches = tuple(
        Branch(b["mu"], _int_list(b["axis_mult"], "branch axis_mult"), b.get("components", 1))
        for b in data.get("branches", [])
    )
    inter = {}
    for rec in data.get("intersections", []):
        i, j, v = _int_list(rec, "intersection record")
        inter[(i, j)] = v
    return LocalPointData(
        data["point_type"],
        data["mu"],
        _int_list(data["axis_mult"], "axis_mult"),
        branches,
        inter,
    )


def load(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path} is not valid JSON: {exc}") from exc
