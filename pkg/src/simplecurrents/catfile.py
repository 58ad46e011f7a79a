"""Persistent category files: canonical JSON with mandatory validation on load.

Schema (version 1, keys sorted, UTF-8):

    {
      "schema_version": 1,
      "source": {"family": "A", "rank": 3, "level": 2}  |  "external",
      "simples": ["0", "L3", ...],
      "dual":    [0, 6, ...],
      "fusion":  [[a, b, c, N], ...],          # nonzero entries, sorted
      "twists":  [[num, den], ...],            # reduced, 0 <= num < den
      "qdims":   [1.0, ...]
    }

External files (source = "external") let non-level-k data, e.g. an Ising
category, exercise the auto-equivalence machinery; they go through exactly
the same validation as built files.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import fusion, lie, modular
from .angles import RationalAngle
from .fusion import FusionRing
from .modular import ModularCategoryData

SCHEMA_VERSION = 1


class CategoryFileError(ValueError):
    """A category file failed to parse or validate."""


def category_to_payload(data: ModularCategoryData, source) -> dict:
    ring = data.ring
    quads = sorted(
        [a, b, c, m]
        for (a, b), fiber in ring.tensor.items()
        for c, m in fiber.items()
        if m
    )
    return {
        "schema_version": SCHEMA_VERSION,
        "source": source,
        "simples": list(ring.simples),
        "dual": list(ring.dual),
        "fusion": quads,
        "twists": [list(t.pair) for t in data.twist],
        "qdims": list(data.qdim),
    }


def dumps_canonical(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def payload_to_category(payload: dict) -> tuple[ModularCategoryData, object]:
    """Validate a payload and rebuild the category data; raises CategoryFileError."""
    try:
        if payload.get("schema_version") != SCHEMA_VERSION:
            raise CategoryFileError(
                f"unsupported schema_version {payload.get('schema_version')!r}")
        source = payload["source"]
        simples = [str(s) for s in payload["simples"]]
        dual = [int(x) for x in payload["dual"]]
        quads = [[int(x) for x in q] for q in payload["fusion"]]
        twists_raw = [list(t) for t in payload["twists"]]
        qdims = [float(x) for x in payload["qdims"]]
    except CategoryFileError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise CategoryFileError(f"malformed category payload: {exc}") from None

    n = len(simples)
    if n == 0:
        raise CategoryFileError("category must have at least one simple object")
    if len(set(simples)) != n:
        raise CategoryFileError("simple labels must be distinct")
    if len(dual) != n or len(twists_raw) != n or len(qdims) != n:
        raise CategoryFileError("dual/twists/qdims lengths must equal the simple count")

    tensor: dict[tuple[int, int], dict[int, int]] = {}
    for a, b, c, m in quads:
        if not (0 <= a < n and 0 <= b < n and 0 <= c < n):
            raise CategoryFileError(f"fusion quadruple {[a, b, c, m]} out of range")
        if m < 1:
            raise CategoryFileError(f"fusion multiplicity must be >= 1, got {m}")
        fiber = tensor.setdefault((a, b), {})
        if c in fiber:
            raise CategoryFileError(f"duplicate fusion entry for ({a},{b},{c})")
        fiber[c] = m

    twists = []
    for num, den in twists_raw:
        try:
            t = RationalAngle(num, den)
        except ValueError as exc:
            raise CategoryFileError(str(exc)) from None
        if t.pair != (num, den):
            raise CategoryFileError(
                f"twist [{num},{den}] must be stored reduced with 0 <= num < den")
        twists.append(t)

    ring = FusionRing(simples=tuple(simples), unit_index=0, dual=tuple(dual),
                      tensor=tensor)
    violation = fusion.axiom_violation(ring)
    if violation is not None:
        raise CategoryFileError(f"fusion axioms fail: {violation}")

    data = ModularCategoryData(ring=ring, twist=tuple(twists), qdim=tuple(qdims))
    try:
        modular.validate(data)
        modular.check_modular_grading(data)
    except modular.InconsistentDataError as exc:
        raise CategoryFileError(str(exc)) from None

    if source != "external":
        if (not isinstance(source, dict)
                or set(source) != {"family", "rank", "level"}):
            raise CategoryFileError(
                'source must be "external" or {"family", "rank", "level"}')
    return data, source


def save_category(path, data: ModularCategoryData, source) -> None:
    Path(path).write_text(dumps_canonical(category_to_payload(data, source)),
                          encoding="utf-8")


def load_category(path) -> tuple[ModularCategoryData, object]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CategoryFileError(f"cannot read {path}: {exc}") from None
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CategoryFileError(f"{path} is not valid JSON: {exc}") from None
    return payload_to_category(payload)


def build_category_file(family: str, rank: int, level: int,
                        out_path=None) -> ModularCategoryData:
    """Build a level-k category and optionally persist it."""
    spec = lie.lie_algebra(family, rank)
    data = modular.build_wzw_data(spec, level)
    if out_path is not None:
        save_category(out_path, data,
                      {"family": spec.family, "rank": rank, "level": level})
    return data
