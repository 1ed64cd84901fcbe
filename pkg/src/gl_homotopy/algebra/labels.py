"""
Kac, anti-Kac and simple labels of a GL(m|1) block.

``V(i)`` is the Kac module with top ``L(i)`` and socle ``L(i-1)``;
``V(i)*`` is its twisted dual with the same composition factors.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from ..errors import ParseError

__all__ = """
    LabelKind
    Label
    kac
    anti_kac
    simple
    parse_label
""".split()

_LABEL_RE = re.compile(r"^\s*([VL])\(\s*(-?\d+)\s*\)(\*?)\s*$")


class LabelKind(str, enum.Enum):
    """Kind of a Grothendieck-group label."""

    KAC = "V"
    ANTI_KAC = "V*"
    SIMPLE = "L"


@dataclass(frozen=True, order=True)
class Label:
    """A class ``[V(i)]``, ``[V(i)*]`` or ``[L(i)]``."""

    kind: LabelKind
    index: int

    def __str__(self) -> str:
        """``V(3)``, ``V(3)*`` or ``L(3)``."""
        if self.kind is LabelKind.ANTI_KAC:
            return f"V({self.index})*"
        return f"{self.kind.value}({self.index})"

    def factors(self) -> tuple[int, ...]:
        """Indices of the composition factors."""
        if self.kind is LabelKind.SIMPLE:
            return (self.index,)
        return (self.index, self.index - 1)

    def dual(self) -> Label:
        """Twisted dual: ``V(i) ↔ V(i)*``, simples fixed."""
        if self.kind is LabelKind.KAC:
            return Label(LabelKind.ANTI_KAC, self.index)
        if self.kind is LabelKind.ANTI_KAC:
            return Label(LabelKind.KAC, self.index)
        return self


def kac(i: int) -> Label:
    """``V(i)``."""
    return Label(LabelKind.KAC, i)


def anti_kac(i: int) -> Label:
    """``V(i)*``."""
    return Label(LabelKind.ANTI_KAC, i)


def simple(i: int) -> Label:
    """``L(i)``."""
    return Label(LabelKind.SIMPLE, i)


def parse_label(text: str) -> Label:
    """Parse ``"V(3)"``, ``"V(-1)*"`` or ``"L(0)"``."""
    match = _LABEL_RE.match(text)
    if match is None:
        raise ParseError(
            f"Label {text!r} is not of the form V(i), V(i)* or L(i)."
        )
    letter, index, star = match.groups()
    if letter == "L":
        if star:
            raise ParseError(f"Simple labels are self-dual; drop '*' in {text!r}.")
        return simple(int(index))
    return anti_kac(int(index)) if star else kac(int(index))
