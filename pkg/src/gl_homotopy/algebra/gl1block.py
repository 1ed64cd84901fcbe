"""
Coordinates inside an atypical GL(m|1) block.

An atypical GL(m|1) weight has ``m - 1`` vee labels that are not wedge
labels (the *core*) and one label shared by both sets (the atypical
position).  Fixing the core fixes the block; the simples of the block are
indexed by ``i ∈ ℤ`` through the order isomorphism ``ℤ → ℤ ∖ core`` that
sends ``0`` to a chosen base position.  ``L(i-1)`` is the socle of the
Kac module whose top is ``L(i)``.

.. autosummary::
    ~BlockKey
    ~BlockPoint
    ~block_key
    ~weight_at
    ~step
    ~block_deg
    ~neighbors
    ~trivial_block
    ~default_block
"""

from __future__ import annotations

import bisect
import logging
from dataclasses import dataclass
from typing import Any

from ..errors import InvalidBlockKey
from ..errors import ParseError
from ..errors import TypicalWeight
from ..errors import WrongShape
from ..utils.iconfig import config_section
from .weights import Weight
from .weights import deg_bidegree
from .weights import label_sets
from .weights import parse_weight

logger = logging.getLogger(__name__)

__all__ = """
    BlockKey
    BlockPoint
    block_key
    weight_at
    step
    block_deg
    neighbors
    trivial_block
    default_block
""".split()


@dataclass(frozen=True)
class BlockKey:
    """Core set and base position of one atypical GL(m|1) block."""

    m: int
    core: frozenset[int]
    base: int

    def __post_init__(self) -> None:
        """Check ``|core| = m - 1`` and ``base ∉ core``."""
        core = frozenset(int(c) for c in self.core)
        object.__setattr__(self, "core", core)
        object.__setattr__(self, "base", int(self.base))
        if self.m < 1:
            raise InvalidBlockKey(f"GL(m|1) needs m >= 1, got m={self.m}.")
        if len(core) != self.m - 1:
            raise InvalidBlockKey(
                f"A GL({self.m}|1) block has a core of {self.m - 1} labels, "
                f"got {sorted(core)}."
            )
        if self.base in core:
            raise InvalidBlockKey(
                f"Base position {self.base} lies in the core {sorted(core)}."
            )

    @property
    def sorted_core(self) -> tuple[int, ...]:
        """Core labels in increasing order."""
        return tuple(sorted(self.core))

    def _core_between(self, low: int, high: int) -> int:
        """Number of core labels ``c`` with ``low < c <= high``."""
        core = self.sorted_core
        return bisect.bisect_right(core, high) - bisect.bisect_right(core, low)

    def position(self, i: int) -> int:
        """Atypical position of ``L(i)``: the ``i``-th free integer."""
        # least fixed point of p = base + i ± (core labels passed)
        if i >= 0:
            p = self.base + i
            while True:
                q = self.base + i + self._core_between(self.base, p)
                if q == p:
                    return p
                p = q
        p = self.base + i
        while True:
            q = self.base + i - self._core_between(p - 1, self.base)
            if q == p:
                return p
            p = q

    def index_of(self, position: int) -> int:
        """Inverse of :meth:`position`."""
        if position in self.core:
            raise InvalidBlockKey(
                f"Position {position} is a core label of {self}; no simple "
                "of the block sits there."
            )
        if position >= self.base:
            return position - self.base - self._core_between(self.base, position)
        return position - self.base + self._core_between(position - 1, self.base)

    def __str__(self) -> str:
        """Short form ``core={…} base=…``."""
        core = ",".join(str(c) for c in self.sorted_core)
        return f"core={{{core}}} base={self.base}"

    def to_dict(self) -> dict[str, Any]:
        """JSON form ``{"core": […], "base": …}``."""
        return {"core": list(self.sorted_core), "base": self.base}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> BlockKey:
        """Inverse of :meth:`to_dict`; ``m`` is ``len(core) + 1``."""
        try:
            core = frozenset(int(c) for c in data["core"])
            return cls(len(core) + 1, core, int(data["base"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(
                f"Block JSON needs keys 'core' and 'base'; got {data!r}."
            ) from exc


@dataclass(frozen=True)
class BlockPoint:
    """The simple ``L(index)`` of a block."""

    key: BlockKey
    index: int

    @property
    def position(self) -> int:
        """Atypical position of this simple."""
        return self.key.position(self.index)

    @property
    def weight(self) -> Weight:
        """Highest weight of this simple."""
        return weight_at(self.key, self.index)


def block_key(w: Weight) -> tuple[BlockKey, int]:
    """Return the block of ``w`` with ``w`` itself at index 0."""
    if w.n != 1:
        raise WrongShape(
            f"Block coordinates exist for GL(m|1) only; {w} is a "
            f"GL({w.m}|{w.n}) weight."
        )
    sets = label_sets(w)
    shared = sets.vee & sets.wedge
    if not shared:
        raise TypicalWeight(
            f"Weight {w} is typical; its block is semisimple with one simple."
        )
    (base,) = shared
    return BlockKey(w.m, sets.vee - shared, base), 0


def weight_at(key: BlockKey, i: int) -> Weight:
    """Dominant weight with vee = core ∪ {p}, wedge = {p}, p = position(i)."""
    p = key.position(i)
    vee = sorted(key.core | {p}, reverse=True)
    even = [v - 1 + idx for idx, v in enumerate(vee, start=1)]
    return Weight.from_parts(even, (1 - key.m - p,))


def step(key: BlockKey, i: int, k: int) -> int:
    """Position of ``L(i + k)``."""
    return key.position(i + k)


def block_deg(key: BlockKey, i: int) -> int:
    """Degree of ``L(i)``; strictly increasing in ``i``."""
    return deg_bidegree(weight_at(key, i)).deg


def neighbors(key: BlockKey, i: int) -> dict[str, Any]:
    """Socle neighbour ``L(i-1)`` and top neighbour ``L(i+1)`` of ``L(i)``."""
    return {
        "index": i,
        "weight": weight_at(key, i),
        "socle": (i - 1, weight_at(key, i - 1)),
        "top": (i + 1, weight_at(key, i + 1)),
    }


def trivial_block(m: int) -> tuple[BlockKey, int]:
    """Block of the trivial GL(m|1) representation, trivial at index 0.

    Index ``-1`` carries ``Π = (0,…,0,-1|1)``, the socle of the Kac module
    of the trivial representation.
    """
    return block_key(Weight(m, 1, (0,) * (m + 1)))


def default_block() -> tuple[BlockKey, int]:
    """Block named by ``DEFAULT_BLOCK.WEIGHT`` in iconfig.yml (GL(1|1) ``0|0``)."""
    text = config_section("DEFAULT_BLOCK").get("WEIGHT", "0|0")
    return block_key(parse_weight(str(text)))
