"""Textual set descriptions consumed by the command line.

Two input forms are accepted:

* a mini-grammar string ``kind key=value ...`` where vectors are
  comma-separated reals and vertex lists are semicolon-separated vectors,
  e.g. ``ball2 c=2,2 r=1`` or ``polytope v=0,0;1,0;0,1``;
* ``@path`` pointing to a JSON file with a ``kind`` tag and the field
  names listed below.

Kinds and fields (grammar key / JSON name):

    box       l/lower, u/upper
    ball2     c/center, r/radius
    ball1     r/radius, n/dim
    ballinf   r/radius, n/dim
    simplex   n/dim
    polytope  v/vertices
    singleton p/point

All malformed inputs raise ValueError.
"""

from __future__ import annotations

import json

from .sets import Ball1, Ball2, BallInf, Box, ConvexSet, PolytopeV, Simplex, Singleton


def _floats(text: str) -> list[float]:
    try:
        return [float(t) for t in text.split(",")]
    except ValueError:
        raise ValueError(f"expected comma-separated reals, got {text!r}") from None


def _vectors(text: str) -> list[list[float]]:
    return [_floats(part) for part in text.split(";")]


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"expected an integer, got {text!r}") from None


def _float(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ValueError(f"expected a real number, got {text!r}") from None


def _fields(parts: list[str]) -> dict[str, str]:
    out = {}
    for part in parts:
        if "=" not in part:
            raise ValueError(f"expected key=value, got {part!r}")
        key, _, value = part.partition("=")
        out[key] = value
    return out


def _get(fields: dict, *names):
    for name in names:
        if name in fields:
            return fields[name]
    raise ValueError(f"missing required field {'/'.join(names)!r}")


def _build(kind: str, fields: dict) -> ConvexSet:
    grammar = all(isinstance(v, str) for v in fields.values())

    def vec(*names):
        raw = _get(fields, *names)
        return _floats(raw) if grammar else raw

    def real(*names):
        raw = _get(fields, *names)
        return _float(raw) if grammar else float(raw)

    def integer(*names):
        raw = _get(fields, *names)
        return _int(raw) if grammar else int(raw)

    if kind == "box":
        return Box(vec("l", "lower"), vec("u", "upper"))
    if kind == "ball2":
        return Ball2(vec("c", "center"), real("r", "radius"))
    if kind == "ball1":
        return Ball1(real("r", "radius"), integer("n", "dim"))
    if kind == "ballinf":
        return BallInf(real("r", "radius"), integer("n", "dim"))
    if kind == "simplex":
        return Simplex(integer("n", "dim"))
    if kind == "polytope":
        raw = _get(fields, "v", "vertices")
        return PolytopeV(_vectors(raw) if grammar else raw)
    if kind == "singleton":
        return Singleton(vec("p", "point"))
    raise ValueError(f"unknown set kind {kind!r}")


def parse_set(spec: str) -> ConvexSet:
    """Build a set from a grammar string or an @file JSON reference."""
    spec = spec.strip()
    if not spec:
        raise ValueError("empty set specification")
    if spec.startswith("@"):
        try:
            with open(spec[1:], "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ValueError(f"cannot read set file {spec[1:]!r}: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ValueError(f"invalid JSON in {spec[1:]!r}: {exc}") from None
        if not isinstance(data, dict) or "kind" not in data:
            raise ValueError("set JSON must be an object with a 'kind' tag")
        fields = {k: v for k, v in data.items() if k != "kind"}
        return _build(str(data["kind"]).lower(), fields)
    parts = spec.split()
    return _build(parts[0].lower(), _fields(parts[1:]))
