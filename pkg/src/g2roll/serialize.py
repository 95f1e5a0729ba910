"""JSON encoding of exact values.

Rationals are strings ``"p/q"`` (or plain integers on input), Gaussian
rationals are ``{"re": ..., "im": ...}``.  Floats are rejected on input so
that nothing inexact sneaks into the exact modules.
"""
from __future__ import annotations

import json
from typing import Any, List, Sequence

from .scalars import decode_scalar, encode_scalar


class PayloadError(ValueError):
    """Malformed input payload (a usage error, not a domain error)."""


def _reject_floats(text: str):
    raise PayloadError(f"float literal {text} is not exact; use a \"p/q\" string")


def parse_json(text: str) -> Any:
    try:
        return json.loads(text, parse_float=_reject_floats)
    except json.JSONDecodeError as exc:
        raise PayloadError(f"malformed JSON: {exc.msg}") from exc


def decode_vector(obj: Any, length: int = 7) -> tuple:
    if not isinstance(obj, list) or len(obj) != length:
        raise PayloadError(f"expected a JSON array of {length} scalars")
    try:
        return tuple(decode_scalar(c) for c in obj)
    except (TypeError, ValueError) as exc:
        raise PayloadError(str(exc)) from exc


def decode_vectors(obj: Any, count: int, length: int = 7) -> List[tuple]:
    if not isinstance(obj, list) or len(obj) != count:
        raise PayloadError(f"expected a JSON array of {count} vectors")
    return [decode_vector(v, length) for v in obj]


def decode_matrix(obj: Any, n: int = 7) -> List[tuple]:
    if not isinstance(obj, list) or len(obj) != n:
        raise PayloadError(f"expected a {n}x{n} JSON matrix")
    return [decode_vector(r, n) for r in obj]


def encode_vector(v: Sequence) -> list:
    return [encode_scalar(c) for c in v]


def encode_matrix(m: Sequence[Sequence]) -> list:
    return [encode_vector(r) for r in m]


def encode(obj: Any) -> Any:
    """Recursively encode tuples/lists of scalars, dicts passing through."""
    if isinstance(obj, dict):
        return {k: encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [encode(v) for v in obj]
    if isinstance(obj, (str, bool, float)) or obj is None:
        return obj
    return encode_scalar(obj)


def dumps(obj: Any, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(obj, indent=2, default=str)
    return json.dumps(obj, separators=(",", ":"), default=str)
