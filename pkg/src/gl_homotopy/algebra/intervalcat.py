"""
Interval modules of one atypical GL(m|1) block.

The non-projective indecomposables of an atypical block correspond to
intervals ``[a, b]``: ``R[a,b]`` has socle ``L(a), L(a+2), …`` and top
``L(a+1), L(a+3), …``; ``B[a,b] = R[a,b]*`` is its twisted dual.  ``L(i)``
is ``R[i,i] = B[i,i]`` and ``P(i)`` is the projective cover of ``L(i)``
with factors ``L(i-1), L(i), L(i), L(i+1)``.  The Kac module is
``V(i) = R[i-1,i]`` and the anti-Kac module ``V(i)* = B[i-1,i]``.

Objects are formal multisets of indecomposables; filtrations are label
lists, not submodule chains.

.. autosummary::
    ~IndecKind
    ~Indec
    ~BlockObject
    ~Flag
    ~IdealClass
    ~parse_object
    ~twisted_dual
    ~kac_flag
    ~classify_ideal
    ~composition_factors
    ~length
    ~omega_stage
"""

from __future__ import annotations

import enum
import logging
import re
from collections import Counter
from collections.abc import Iterable
from collections.abc import Iterator
from dataclasses import dataclass
from dataclasses import field
from typing import Any

from ..errors import InvalidObject
from ..errors import NoFlag
from ..errors import ParseError
from .gl1block import BlockKey
from .gl1block import default_block
from .labels import Label
from .labels import anti_kac
from .labels import kac

logger = logging.getLogger(__name__)

__all__ = """
    IndecKind
    Indec
    BlockObject
    Flag
    IdealClass
    interval_r
    interval_b
    simple_module
    projective
    kac_module
    anti_kac_module
    parse_object
    twisted_dual
    kac_flag
    classify_ideal
    composition_factors
    length
    omega_stage
""".split()

_TERM_RE = re.compile(
    r"^(?:(?P<mult>\d+)\s*\*\s*)?"
    r"(?:(?P<iv>[RB])\[\s*(?P<a>-?\d+)\s*,\s*(?P<b>-?\d+)\s*\]"
    r"|(?P<pt>[PL])\(\s*(?P<i>-?\d+)\s*\))$"
)


class IndecKind(str, enum.Enum):
    """Kind of an indecomposable of the block."""

    R = "R"
    B = "B"
    P = "P"


@dataclass(frozen=True, order=True)
class Indec:
    """An indecomposable ``R[a,b]``, ``B[a,b]`` or ``P(a)`` (then a == b)."""

    kind: IndecKind
    a: int
    b: int

    def __post_init__(self) -> None:
        """Validate the interval and identify ``B[i,i]`` with ``R[i,i]``."""
        if self.kind is IndecKind.P:
            if self.a != self.b:
                raise InvalidObject(f"P is given by one index, got {self.a}, {self.b}.")
            return
        if self.a > self.b:
            raise InvalidObject(
                f"Interval [{self.a},{self.b}] is empty; need a <= b."
            )
        if self.kind is IndecKind.B and self.a == self.b:
            object.__setattr__(self, "kind", IndecKind.R)

    @property
    def is_simple(self) -> bool:
        """True for ``L(i)``."""
        return self.kind is not IndecKind.P and self.a == self.b

    @property
    def length(self) -> int:
        """Composition length."""
        if self.kind is IndecKind.P:
            return 4
        return self.b - self.a + 1

    def factors(self) -> list[int]:
        """Composition factor indices with multiplicity."""
        if self.kind is IndecKind.P:
            i = self.a
            return [i - 1, i, i, i + 1]
        return list(range(self.a, self.b + 1))

    def dual(self) -> Indec:
        """Twisted dual: ``R ↔ B``; simples and projectives are fixed."""
        if self.kind is IndecKind.R:
            return Indec(IndecKind.B, self.a, self.b)
        if self.kind is IndecKind.B:
            return Indec(IndecKind.R, self.a, self.b)
        return self

    def __str__(self) -> str:
        """``R[0,3]``, ``B[1,2]``, ``P(0)`` or ``L(4)``."""
        if self.kind is IndecKind.P:
            return f"P({self.a})"
        if self.is_simple:
            return f"L({self.a})"
        return f"{self.kind.value}[{self.a},{self.b}]"

    def to_dict(self) -> dict[str, Any]:
        """JSON record ``{"kind": …, "a": …, "b": …}``."""
        return {"kind": self.kind.value, "a": self.a, "b": self.b}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Indec:
        """Inverse of :meth:`to_dict`; ``"L"`` records are accepted too."""
        try:
            kind = data["kind"]
            a = int(data["a"])
            b = int(data.get("b", a))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"Bad indecomposable record {data!r}.") from exc
        if kind == "L":
            if a != b:
                raise ParseError(f"L record needs a == b, got {data!r}.")
            return simple_module(a)
        try:
            return cls(IndecKind(kind), a, b)
        except ValueError as exc:
            raise ParseError(f"Unknown kind {kind!r} in {data!r}.") from exc


def interval_r(a: int, b: int) -> Indec:
    """``R[a,b]``."""
    return Indec(IndecKind.R, a, b)


def interval_b(a: int, b: int) -> Indec:
    """``B[a,b]``."""
    return Indec(IndecKind.B, a, b)


def simple_module(i: int) -> Indec:
    """``L(i) = R[i,i]``."""
    return Indec(IndecKind.R, i, i)


def projective(i: int) -> Indec:
    """``P(i)``, the projective cover of ``L(i)``."""
    return Indec(IndecKind.P, i, i)


def kac_module(i: int) -> Indec:
    """``V(i) = R[i-1,i]``."""
    return Indec(IndecKind.R, i - 1, i)


def anti_kac_module(i: int) -> Indec:
    """``V(i)* = B[i-1,i]``."""
    return Indec(IndecKind.B, i - 1, i)


def _normalize(
    summands: Iterable[tuple[Indec, int]],
) -> tuple[tuple[Indec, int], ...]:
    counts: Counter[Indec] = Counter()
    for indec, mult in summands:
        if mult < 0:
            raise InvalidObject(f"Negative multiplicity {mult} for {indec}.")
        counts[indec] += mult
    return tuple(sorted((x, k) for x, k in counts.items() if k))


@dataclass(frozen=True)
class BlockObject:
    """Formal direct sum of indecomposables of one block."""

    key: BlockKey = field(default_factory=lambda: default_block()[0])
    summands: tuple[tuple[Indec, int], ...] = ()

    def __post_init__(self) -> None:
        """Merge repeated summands and drop zero multiplicities."""
        object.__setattr__(self, "summands", _normalize(self.summands))

    @classmethod
    def of(cls, *indecs: Indec, key: BlockKey | None = None) -> BlockObject:
        """Direct sum of the given indecomposables."""
        if key is None:
            key = default_block()[0]
        return cls(key, tuple((x, 1) for x in indecs))

    @property
    def is_zero(self) -> bool:
        """True for the empty sum."""
        return not self.summands

    def __iter__(self) -> Iterator[Indec]:
        """Every summand, repeated by multiplicity."""
        for indec, mult in self.summands:
            for _ in range(mult):
                yield indec

    def counter(self) -> Counter[Indec]:
        """Multiplicities as a Counter."""
        return Counter(dict(self.summands))

    def __add__(self, other: BlockObject) -> BlockObject:
        """Direct sum; both objects must live in the same block."""
        if not isinstance(other, BlockObject):
            return NotImplemented
        if other.key != self.key:
            raise InvalidObject(
                f"Cannot add objects of blocks {self.key} and {other.key}."
            )
        return BlockObject(self.key, self.summands + other.summands)

    def __rmul__(self, k: int) -> BlockObject:
        """``k`` copies of the object."""
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        return BlockObject(self.key, tuple((x, m * k) for x, m in self.summands))

    def __str__(self) -> str:
        """``R[0,3] + 2*B[1,2] + P(0)``; ``0`` for the zero object."""
        if self.is_zero:
            return "0"
        return " + ".join(
            str(x) if k == 1 else f"{k}*{x}" for x, k in self.summands
        )

    def to_dict(self) -> dict[str, Any]:
        """JSON form with the block key and an array of records."""
        return {
            "block": self.key.to_dict(),
            "summands": [
                {**x.to_dict(), "mult": k} for x, k in self.summands
            ],
        }

    @classmethod
    def from_dict(cls, data: Any, key: BlockKey | None = None) -> BlockObject:
        """Accept the :meth:`to_dict` form or a bare array of records."""
        if isinstance(data, dict):
            if "block" in data:
                key = BlockKey.from_dict(data["block"])
            records = data.get("summands", [])
        else:
            records = data
        if key is None:
            key = default_block()[0]
        if not isinstance(records, list):
            raise ParseError(f"Expected an array of records, got {records!r}.")
        return cls(
            key,
            tuple(
                (Indec.from_dict(r), int(r.get("mult", 1))) for r in records
            ),
        )


@dataclass(frozen=True)
class Flag:
    """Kac and/or anti-Kac flag, each listed bottom to top."""

    kac: tuple[Label, ...] | None = None
    anti_kac: tuple[Label, ...] | None = None


@dataclass(frozen=True)
class IdealClass:
    """Membership in 𝒯₊, 𝒯₋ and the projectives."""

    in_Tplus: bool
    in_Tminus: bool
    projective: bool
    per_summand: tuple[tuple[Indec, bool, bool, bool], ...] = ()


def parse_object(text: str, key: BlockKey | None = None) -> BlockObject:
    """Parse ``"R[0,3] + 2*B[1,2] + P(0) + L(4)"``; ``"0"`` is the zero object."""
    if key is None:
        key = default_block()[0]
    text = text.strip()
    if text in ("", "0"):
        return BlockObject(key)
    summands = []
    for term in text.split("+"):
        match = _TERM_RE.match(term.strip())
        if match is None:
            raise ParseError(
                f"Cannot parse {term.strip()!r}; expected R[a,b], B[a,b], "
                "P(i) or L(i), optionally prefixed by 'k*'."
            )
        mult = int(match["mult"] or 1)
        if match["iv"]:
            kind = IndecKind(match["iv"])
            indec = Indec(kind, int(match["a"]), int(match["b"]))
        elif match["pt"] == "P":
            indec = projective(int(match["i"]))
        else:
            indec = simple_module(int(match["i"]))
        summands.append((indec, mult))
    return BlockObject(key, tuple(summands))


def twisted_dual(x: BlockObject) -> BlockObject:
    """Apply ``*`` summand-wise; an involution."""
    return BlockObject(x.key, tuple((i.dual(), k) for i, k in x.summands))


def kac_flag(x: Indec) -> Flag:
    """Kac or anti-Kac flag of an even interval or a projective.

    ``R[a,b]`` (even) has the Kac flag ``V(b), V(b-2), …, V(a+1)`` with
    ``V(b)`` at the bottom; ``B[a,b]`` (even) has the anti-Kac flag
    ``V(a+1)*, V(a+3)*, …, V(b)*``.  ``P(i)`` has both, ``V(i+1), V(i)``
    and ``V(i)*, V(i+1)*``.
    """
    if x.kind is IndecKind.P:
        i = x.a
        return Flag(
            kac=(kac(i + 1), kac(i)), anti_kac=(anti_kac(i), anti_kac(i + 1))
        )
    if x.length % 2:
        raise NoFlag(
            f"{x} has odd length {x.length}; it lies in neither 𝒯₊ nor 𝒯₋."
        )
    tops = range(x.a + 1, x.b + 1, 2)
    if x.kind is IndecKind.R:
        return Flag(kac=tuple(kac(i) for i in reversed(tops)))
    return Flag(anti_kac=tuple(anti_kac(i) for i in tops))


def _classify_one(x: Indec) -> tuple[bool, bool, bool]:
    if x.kind is IndecKind.P:
        return True, True, True
    if x.length % 2:
        return False, False, False
    return x.kind is IndecKind.R, x.kind is IndecKind.B, False


def classify_ideal(x: BlockObject) -> IdealClass:
    """Aggregate 𝒯₊ / 𝒯₋ / projective membership over all summands."""
    per = tuple((i, *_classify_one(i)) for i, _ in x.summands)
    return IdealClass(
        in_Tplus=all(p for _, p, _, _ in per),
        in_Tminus=all(m for _, _, m, _ in per),
        projective=all(q for _, _, _, q in per),
        per_summand=per,
    )


def composition_factors(x: BlockObject) -> Counter[int]:
    """Multiset of simple indices."""
    factors: Counter[int] = Counter()
    for indec, mult in x.summands:
        for i in indec.factors():
            factors[i] += mult
    return factors


def length(x: BlockObject) -> int:
    """Total composition length."""
    return sum(composition_factors(x).values())


def omega_stage(u: int, i: int) -> Indec:
    """``Ω_i = R[u-1-2i, u]``, the ``i``-th step of the minimal model of ``L(u)``.

    ``Ω_0 = V(u)`` and ``Ω_{i+1}/Ω_i = V(u-2i-2)``.
    """
    if i < 0:
        raise InvalidObject(f"Ω_i needs i >= 0, got {i}.")
    return interval_r(u - 1 - 2 * i, u)
