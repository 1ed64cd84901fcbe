"""
Integral dominant weights of GL(m|n).

A weight ``(λ_1, …, λ_m | λ_{m+1}, …, λ_{m+n})`` is stored un-normalized
(no ρ-shift).  Its two label sets are

* ``vee   = {λ_i + 1 - i : 1 <= i <= m}``
* ``wedge = {j - m - λ_{m+j} : 1 <= j <= n}``

and the atypicality is the size of their intersection.  With this
convention the GL(1|1) weight ``(a|-a)`` is atypical and the trivial
GL(n|n) weight is maximally atypical.

.. autosummary::
    ~Weight
    ~LabelSets
    ~Bidegree
    ~parse_weight
    ~deg_bidegree
    ~label_sets
    ~atypicality
    ~is_typical
    ~ber
    ~ber_twist
    ~block_invariant
    ~radical_layer_weights
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any
from typing import NamedTuple

from ..errors import InvalidWeight
from ..errors import ParseError

logger = logging.getLogger(__name__)

__all__ = """
    Weight
    LabelSets
    Bidegree
    parse_weight
    deg_bidegree
    label_sets
    atypicality
    is_typical
    ber
    ber_twist
    block_invariant
    radical_layer_weights
""".split()


@dataclass(frozen=True)
class Weight:
    """Highest weight of an irreducible GL(m|n) representation."""

    m: int
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        """Check shape and dominance of both blocks of rows."""
        if self.m < 1 or self.n < 1:
            raise InvalidWeight(
                f"GL(m|n) needs m, n >= 1, got m={self.m}, n={self.n}."
            )
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.m + self.n:
            raise InvalidWeight(
                f"A GL({self.m}|{self.n}) weight has {self.m + self.n} "
                f"entries, got {len(rows)}: {rows}."
            )
        for part, name in ((self.even, "first"), (self.odd, "second")):
            if any(a < b for a, b in zip(part, part[1:], strict=False)):
                raise InvalidWeight(
                    f"Weight {self} is not dominant: the {name} block "
                    f"{part} must be weakly decreasing."
                )

    @property
    def even(self) -> tuple[int, ...]:
        """Entries λ_1 … λ_m."""
        return self.rows[: self.m]

    @property
    def odd(self) -> tuple[int, ...]:
        """Entries λ_{m+1} … λ_{m+n}."""
        return self.rows[self.m :]

    def __str__(self) -> str:
        """Textual form ``"1,0,-1|2,0"``."""
        return (
            ",".join(str(r) for r in self.even)
            + "|"
            + ",".join(str(r) for r in self.odd)
        )

    def to_dict(self) -> dict[str, Any]:
        """JSON form ``{"m": …, "n": …, "rows": […]}``."""
        return {"m": self.m, "n": self.n, "rows": list(self.rows)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Weight:
        """Inverse of :meth:`to_dict`."""
        try:
            return cls(int(data["m"]), int(data["n"]), tuple(data["rows"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(
                f"Weight JSON needs keys 'm', 'n', 'rows'; got {data!r}."
            ) from exc

    @classmethod
    def from_parts(cls, even, odd) -> Weight:
        """Build from the two blocks of entries."""
        even = tuple(even)
        odd = tuple(odd)
        return cls(len(even), len(odd), even + odd)


class LabelSets(NamedTuple):
    """The vee and wedge label sets of a weight."""

    vee: frozenset[int]
    wedge: frozenset[int]


class Bidegree(NamedTuple):
    """Bidegree ``(d, d')`` and the degree used for filtrations."""

    d: int
    dprime: int
    deg: int


def parse_weight(text: str) -> Weight:
    """Parse ``"1,0,-1|2,0"``; both sides of the bar must be nonempty."""
    if text.count("|") != 1:
        raise ParseError(
            f"Weight {text!r} needs exactly one '|' separating the GL(m) "
            "and GL(n) entries, e.g. '1,0|0'."
        )
    left, right = text.split("|")
    try:
        even = [int(x) for x in left.split(",") if x.strip()]
        odd = [int(x) for x in right.split(",") if x.strip()]
    except ValueError as exc:
        raise ParseError(f"Weight {text!r} has a non-integer entry.") from exc
    if not even or not odd:
        raise ParseError(f"Weight {text!r} needs entries on both sides of '|'.")
    return Weight.from_parts(even, odd)


def deg_bidegree(w: Weight) -> Bidegree:
    """Return ``(d, d', deg)`` with ``deg = d``."""
    d = sum(w.even)
    dprime = sum(w.odd)
    return Bidegree(d, dprime, d)


def label_sets(w: Weight) -> LabelSets:
    """Return the vee and wedge label sets of ``w``."""
    vee = frozenset(lam + 1 - i for i, lam in enumerate(w.even, start=1))
    wedge = frozenset(j - w.m - lam for j, lam in enumerate(w.odd, start=1))
    return LabelSets(vee, wedge)


def atypicality(w: Weight) -> int:
    """Number of labels shared by vee and wedge."""
    sets = label_sets(w)
    return len(sets.vee & sets.wedge)


def is_typical(w: Weight) -> bool:
    """True when the Kac module of ``w`` is irreducible projective."""
    return atypicality(w) == 0


def ber(m: int, n: int, k: int = 1) -> Weight:
    """The weight of ``Ber^k``."""
    return Weight(m, n, (k,) * m + (-k,) * n)


def ber_twist(w: Weight, k: int) -> Weight:
    """Tensor with ``Ber^k``: add ``k`` to λ_1..λ_m, subtract from the rest."""
    return Weight.from_parts(
        (lam + k for lam in w.even), (lam - k for lam in w.odd)
    )


def block_invariant(w: Weight) -> int:
    """``d + d'``, constant on every GL(m|1) block.

    Both vee and wedge move by the atypical label; the sum of all entries
    only sees the core.
    """
    bd = deg_bidegree(w)
    return bd.d + bd.dprime


def radical_layer_weights(n: int) -> list[Weight]:
    """Highest weights ``(0,…,0,-i,…,-i | 0,…,0)``, ``i = 0..n``, in GL(n|n).

    These label the radical layers of the Kac module of the trivial
    representation.
    """
    if n < 1:
        raise InvalidWeight(f"GL(n|n) needs n >= 1, got {n}.")
    return [
        Weight.from_parts((0,) * (n - i) + (-i,) * i, (0,) * n)
        for i in range(n + 1)
    ]
