"""
Text and JSON payload helpers shared by the command line.

.. autosummary::
    ~read_payload
    ~load_payload
    ~jsonable
    ~dumps
    ~parse_range
    ~parse_int_list
"""

from __future__ import annotations

import json
import logging
import sys
from collections import Counter
from enum import Enum
from typing import Any
from typing import TextIO

from ..errors import ParseError

logger = logging.getLogger(__name__)

__all__ = """
    read_payload
    load_payload
    jsonable
    dumps
    parse_range
    parse_int_list
""".split()


def read_payload(arg: str, stdin: TextIO | None = None) -> str:
    """Return ``arg``, or the contents of stdin when ``arg`` is ``-``."""
    if arg != "-":
        return arg
    text = (stdin or sys.stdin).read()
    logger.debug("Read %d characters from stdin", len(text))
    return text.strip()


def load_payload(text: str) -> Any | None:
    """Decoded JSON when ``text`` looks like a JSON object or array, else None."""
    stripped = text.lstrip()
    if not stripped.startswith(("{", "[")):
        return None
    try:
        return json.loads(stripped)
    except json.JSONDecodeError as exc:
        raise ParseError(f"Payload is not valid JSON: {exc}") from exc


def jsonable(value: Any) -> Any:
    """Convert results to plain JSON types.

    Objects with ``to_dict`` use it; counters keyed by non-strings become
    arrays of ``{"item", "count"}`` records.
    """
    if hasattr(value, "to_dict"):
        return value.to_dict()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Counter):
        if all(isinstance(k, str) for k in value):
            return {k: value[k] for k in sorted(value)}
        return [
            {"item": jsonable(k), "count": c}
            for k, c in sorted(value.items(), key=lambda kv: str(kv[0]))
        ]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, tuple) and hasattr(value, "_asdict"):
        return {k: jsonable(v) for k, v in value._asdict().items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in items]
    return value


def dumps(value: Any) -> str:
    """Stable JSON text of a result."""
    return json.dumps(jsonable(value), indent=2, sort_keys=True, ensure_ascii=False)


def parse_range(text: str) -> range:
    """``"a..b"`` as the inclusive range ``a, …, b``."""
    low, sep, high = text.partition("..")
    try:
        if not sep:
            raise ValueError(text)
        return range(int(low), int(high) + 1)
    except ValueError as exc:
        raise ParseError(f"Range {text!r} must look like '-10..10'.") from exc


def parse_int_list(text: str) -> list[int]:
    """``"3,1,1"`` as ``[3, 1, 1]``; the empty string is ``[]``."""
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ParseError(f"{text!r} is not a comma-separated integer list.") from exc
