"""
Homotopy category of one GL(m|1) block.

After passing to the homotopy category projectives and even ``B`` vanish,
odd intervals become simple and only even ``R`` intervals survive as
non-simple objects.  ``S(i)`` denotes the image of ``L(i)``.  The basis
arrow ``f_ij : S(j) → S(i)`` exists when ``j >= i`` and ``i ≡ j (mod 2)``;
composition is ``f_ij ∘ f_jk = f_ik``.

.. autosummary::
    ~HoKind
    ~HoSummand
    ~HoObject
    ~Arrow
    ~HoMorphism
    ~ho_reduce
    ~ho_lift
    ~shift
    ~hom_dim
    ~basis
    ~compose
    ~identity
    ~isogeny_image
    ~ss_image
    ~split_parity
    ~module_end_dim
    ~radical_dim
    ~is_isomorphic
    ~tensor_stub
    ~parse_ho_object
    ~parse_morphism
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

from ..errors import CompositionMismatch
from ..errors import InvalidObject
from ..errors import ParseError
from ..errors import UnsupportedHom
from ..errors import UnsupportedShift
from .gl1block import BlockKey
from .gl1block import default_block
from .gl1block import weight_at
from .intervalcat import BlockObject
from .intervalcat import IndecKind
from .intervalcat import interval_r
from .intervalcat import simple_module
from .weights import Weight

logger = logging.getLogger(__name__)

__all__ = """
    HoKind
    HoSummand
    HoObject
    Arrow
    HoMorphism
    S
    even_r
    ho_reduce
    ho_lift
    shift
    hom_dim
    basis
    compose
    identity
    arrow
    isogeny_image
    ss_image
    split_parity
    module_end_dim
    radical_dim
    is_isomorphic
    tensor_stub
    parse_ho_object
    parse_morphism
""".split()

_TERM_RE = re.compile(
    r"^(?:(?P<mult>\d+)\s*\*\s*)?"
    r"(?:S\(\s*(?P<i>-?\d+)\s*\)"
    r"|EvenR\[\s*(?P<a>-?\d+)\s*,\s*(?P<b>-?\d+)\s*\])$"
)

_ARROW_RE = re.compile(
    r"^(?:(?P<coeff>-?\d+)\s*\*\s*)?f\(\s*(?P<i>-?\d+)\s*,\s*(?P<j>-?\d+)\s*"
    r"(?:;\s*(?P<p>\d+)\s*,\s*(?P<q>\d+)\s*)?\)$"
)


class HoKind(str, enum.Enum):
    """Kind of a homotopy summand."""

    S = "S"
    EVEN_R = "EvenR"


@dataclass(frozen=True, order=True)
class HoSummand:
    """``S(a)`` (then ``a == b``) or ``EvenR[a,b]`` with ``b - a`` odd."""

    kind: HoKind
    a: int
    b: int

    def __post_init__(self) -> None:
        """Reject odd-length ``R`` and two-index ``S``."""
        if self.kind is HoKind.S:
            if self.a != self.b:
                raise InvalidObject(f"S is given by one index, got {self.a}, {self.b}.")
        elif (self.b - self.a) % 2 == 0 or self.a > self.b:
            raise InvalidObject(
                f"EvenR[{self.a},{self.b}] needs a < b with b - a odd; "
                "odd-length intervals reduce to simples."
            )

    @property
    def index(self) -> int:
        """Index ``i`` of ``S(i)``."""
        if self.kind is not HoKind.S:
            raise UnsupportedHom(f"{self} is not a simple.")
        return self.a

    def __str__(self) -> str:
        """``S(2)`` or ``EvenR[0,3]``."""
        if self.kind is HoKind.S:
            return f"S({self.a})"
        return f"EvenR[{self.a},{self.b}]"

    def to_dict(self) -> dict[str, Any]:
        """JSON record."""
        if self.kind is HoKind.S:
            return {"kind": "S", "i": self.a}
        return {"kind": "EvenR", "a": self.a, "b": self.b}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> HoSummand:
        """Inverse of :meth:`to_dict`; ``S`` records may use ``a`` for ``i``."""
        try:
            kind = HoKind(data["kind"])
            if kind is HoKind.S:
                return S(int(data.get("i", data.get("a"))))
            return even_r(int(data["a"]), int(data["b"]))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, InvalidObject):
                raise
            raise ParseError(f"Bad homotopy summand record {data!r}.") from exc


def S(i: int) -> HoSummand:
    """The image of ``L(i)``."""
    return HoSummand(HoKind.S, i, i)


def even_r(a: int, b: int) -> HoSummand:
    """The image of an even-length ``R[a,b]``."""
    return HoSummand(HoKind.EVEN_R, a, b)


def _normalize(
    summands: Iterable[tuple[HoSummand, int]],
) -> tuple[tuple[HoSummand, int], ...]:
    counts: Counter[HoSummand] = Counter()
    for summand, mult in summands:
        if mult < 0:
            raise InvalidObject(f"Negative multiplicity {mult} for {summand}.")
        counts[summand] += mult
    return tuple(sorted((s, k) for s, k in counts.items() if k))


@dataclass(frozen=True)
class HoObject:
    """Formal direct sum of homotopy summands of one block."""

    key: BlockKey = field(default_factory=lambda: default_block()[0])
    summands: tuple[tuple[HoSummand, int], ...] = ()

    def __post_init__(self) -> None:
        """Merge repeated summands."""
        object.__setattr__(self, "summands", _normalize(self.summands))

    @classmethod
    def of(cls, *summands: HoSummand, key: BlockKey | None = None) -> HoObject:
        """Direct sum of the given summands."""
        if key is None:
            key = default_block()[0]
        return cls(key, tuple((s, 1) for s in summands))

    @property
    def is_zero(self) -> bool:
        """True for the empty sum."""
        return not self.summands

    @property
    def has_even_r(self) -> bool:
        """True when some summand is an ``EvenR``."""
        return any(s.kind is HoKind.EVEN_R for s, _ in self.summands)

    def __iter__(self) -> Iterator[HoSummand]:
        """Every summand, repeated by multiplicity."""
        for summand, mult in self.summands:
            for _ in range(mult):
                yield summand

    def counter(self) -> Counter[HoSummand]:
        """Multiplicities as a Counter."""
        return Counter(dict(self.summands))

    def __add__(self, other: HoObject) -> HoObject:
        """Direct sum."""
        if not isinstance(other, HoObject):
            return NotImplemented
        if other.key != self.key:
            raise InvalidObject(
                f"Cannot add objects of blocks {self.key} and {other.key}."
            )
        return HoObject(self.key, self.summands + other.summands)

    def __str__(self) -> str:
        """``S(0) + 2*S(2)``; ``0`` for the zero object."""
        if self.is_zero:
            return "0"
        return " + ".join(
            str(s) if k == 1 else f"{k}*{s}" for s, k in self.summands
        )

    def to_dict(self) -> dict[str, Any]:
        """JSON form mirroring :class:`BlockObject`."""
        return {
            "block": self.key.to_dict(),
            "summands": [{**s.to_dict(), "mult": k} for s, k in self.summands],
        }

    @classmethod
    def from_dict(cls, data: Any, key: BlockKey | None = None) -> HoObject:
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
                (HoSummand.from_dict(r), int(r.get("mult", 1))) for r in records
            ),
        )


def parse_ho_object(text: str, key: BlockKey | None = None) -> HoObject:
    """Parse ``"S(0) + 2*S(2) + EvenR[0,3]"``; ``"0"`` is the zero object."""
    if key is None:
        key = default_block()[0]
    text = text.strip()
    if text in ("", "0"):
        return HoObject(key)
    summands = []
    for term in text.split("+"):
        match = _TERM_RE.match(term.strip())
        if match is None:
            raise ParseError(
                f"Cannot parse {term.strip()!r}; expected S(i) or EvenR[a,b], "
                "optionally prefixed by 'k*'."
            )
        if match["i"] is not None:
            summand = S(int(match["i"]))
        else:
            summand = even_r(int(match["a"]), int(match["b"]))
        summands.append((summand, int(match["mult"] or 1)))
    return HoObject(key, tuple(summands))


# ----------------------------------------------------------------------
# objects


def ho_reduce(x: BlockObject) -> HoObject:
    """Image of a block object in the homotopy category."""
    summands = []
    for indec, mult in x.summands:
        if indec.kind is IndecKind.P:
            continue
        odd = indec.length % 2 == 1
        if indec.kind is IndecKind.B:
            if odd:
                summands.append((S(indec.b), mult))
        elif odd:
            summands.append((S(indec.a), mult))
        else:
            summands.append((even_r(indec.a, indec.b), mult))
    result = HoObject(x.key, tuple(summands))
    logger.debug("ho_reduce(%s) = %s", x, result)
    return result


def ho_lift(x: HoObject) -> BlockObject:
    """Canonical preimage: ``S(i) ↦ L(i)``, ``EvenR[a,b] ↦ R[a,b]``."""
    return BlockObject(
        x.key,
        tuple(
            (simple_module(s.a) if s.kind is HoKind.S else interval_r(s.a, s.b), m)
            for s, m in x.summands
        ),
    )


def shift(x: HoObject, k: int) -> HoObject:
    """Apply ``[k]``: ``S(i)[k] = S(i - k)``."""
    if k == 0:
        return x
    if x.has_even_r:
        raise UnsupportedShift(
            f"Shift by {k} of {x} is undefined: EvenR summands have no "
            "known shift."
        )
    return HoObject(x.key, tuple((S(s.a - k), m) for s, m in x.summands))


def _arrow_exists(source: HoSummand, target: HoSummand) -> bool:
    if source.kind is HoKind.S and target.kind is HoKind.S:
        return source.a >= target.a and (source.a - target.a) % 2 == 0
    return source == target


def _check_hom_domain(x: HoObject, y: HoObject) -> None:
    if not (x.has_even_r or y.has_even_r):
        return
    if x == y and len(x.summands) == 1 and x.summands[0][1] == 1:
        return
    raise UnsupportedHom(
        f"[{x}, {y}] is only known between sums of S(i) or for a single "
        "EvenR against itself."
    )


def hom_dim(x: HoObject, y: HoObject) -> int:
    """Dimension of ``[x, y]``; zero between different blocks."""
    if x.is_zero or y.is_zero or x.key != y.key:
        return 0
    _check_hom_domain(x, y)
    return sum(
        mx * my
        for sx, mx in x.summands
        for sy, my in y.summands
        if _arrow_exists(sx, sy)
    )


# ----------------------------------------------------------------------
# morphisms


@dataclass(frozen=True, order=True)
class Arrow:
    """Basis arrow between two summands; ``f_ij`` when both are simple.

    ``source_copy`` and ``target_copy`` pick one copy of a repeated
    summand, counting from 0.
    """

    source: HoSummand
    target: HoSummand
    source_copy: int = 0
    target_copy: int = 0

    def __post_init__(self) -> None:
        """Only arrows allowed by the existence rule."""
        if not _arrow_exists(self.source, self.target):
            raise InvalidObject(
                f"No basis arrow {self.source} → {self.target}: need "
                "j >= i with i ≡ j (mod 2) for f_ij : S(j) → S(i)."
            )
        if self.source_copy < 0 or self.target_copy < 0:
            raise InvalidObject(
                f"Summand copies count from 0, got {self.source_copy}, "
                f"{self.target_copy}."
            )

    @property
    def i(self) -> int:
        """Target index."""
        return self.target.index

    @property
    def j(self) -> int:
        """Source index."""
        return self.source.index

    @property
    def tagged(self) -> bool:
        """True when the arrow leaves or enters a copy other than the first."""
        return bool(self.source_copy or self.target_copy)

    def __str__(self) -> str:
        """``f_{0,2}``, ``f_{0,0}[1,0]`` or ``id(EvenR[0,3])``."""
        if self.source.kind is HoKind.S:
            text = f"f_{{{self.i},{self.j}}}"
        else:
            text = f"id({self.source})"
        if self.tagged:
            text += f"[{self.source_copy},{self.target_copy}]"
        return text

    def to_dict(self) -> dict[str, Any]:
        """``{"i": …, "j": …}`` for simple arrows, plus copies when tagged."""
        if self.source.kind is HoKind.S:
            data = {"i": self.i, "j": self.j}
        else:
            data = {
                "source": self.source.to_dict(),
                "target": self.target.to_dict(),
            }
        if self.tagged:
            data["source_copy"] = self.source_copy
            data["target_copy"] = self.target_copy
        return data

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Arrow:
        """Inverse of :meth:`to_dict`."""
        copies = (
            int(data.get("source_copy", 0)),
            int(data.get("target_copy", 0)),
        )
        if "i" in data:
            return cls(S(int(data["j"])), S(int(data["i"])), *copies)
        try:
            return cls(
                HoSummand.from_dict(data["source"]),
                HoSummand.from_dict(data["target"]),
                *copies,
            )
        except KeyError as exc:
            raise ParseError(f"Bad arrow record {data!r}.") from exc


def _endpoints(
    arrows: Iterable[tuple[Arrow, int]], key: BlockKey
) -> tuple[HoObject, HoObject]:
    """Smallest source and target holding every copy the arrows touch."""
    source: Counter[HoSummand] = Counter()
    target: Counter[HoSummand] = Counter()
    for a, _ in arrows:
        source[a.source] = max(source[a.source], a.source_copy + 1)
        target[a.target] = max(target[a.target], a.target_copy + 1)
    return (
        HoObject(key, tuple(source.items())),
        HoObject(key, tuple(target.items())),
    )


@dataclass(frozen=True)
class HoMorphism:
    """Integer combination of basis arrows from ``source`` to ``target``."""

    source: HoObject
    target: HoObject
    arrows: tuple[tuple[Arrow, int], ...] = ()

    def __post_init__(self) -> None:
        """Merge arrows, drop zero coefficients, check endpoints."""
        coeffs: Counter[Arrow] = Counter()
        for a, c in self.arrows:
            coeffs[a] += c
        arrows = tuple(sorted((a, c) for a, c in coeffs.items() if c))
        src = self.source.counter()
        tgt = self.target.counter()
        for a, _ in arrows:
            if (
                self.source.key != self.target.key
                or a.source_copy >= src[a.source]
                or a.target_copy >= tgt[a.target]
            ):
                raise InvalidObject(
                    f"Arrow {a} does not run from a summand of {self.source} "
                    f"to a summand of {self.target}."
                )
        object.__setattr__(self, "arrows", arrows)

    @property
    def is_zero(self) -> bool:
        """True for the zero morphism."""
        return not self.arrows

    def coefficient(self, a: Arrow) -> int:
        """Coefficient of one basis arrow."""
        return dict(self.arrows).get(a, 0)

    def __str__(self) -> str:
        """``f_{0,4} + 2*f_{2,4}``."""
        if self.is_zero:
            return "0"
        return " + ".join(
            str(a) if c == 1 else f"{c}*{a}" for a, c in self.arrows
        )

    def to_dict(self) -> dict[str, Any]:
        """Endpoints plus an array of ``{"i", "j", "coeff"}`` records."""
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "arrows": [{**a.to_dict(), "coeff": c} for a, c in self.arrows],
        }

    @classmethod
    def from_dict(
        cls, data: dict[str, Any], key: BlockKey | None = None
    ) -> HoMorphism:
        """Inverse of :meth:`to_dict`.

        Without ``source``/``target`` the endpoints are the sums of the
        simples the arrows touch, in block ``key`` (default: iconfig).
        """
        records = data.get("arrows", []) if isinstance(data, dict) else data
        arrows = tuple(
            (Arrow.from_dict(r), int(r.get("coeff", 1))) for r in records
        )
        if isinstance(data, dict) and "source" in data:
            source = HoObject.from_dict(data["source"], key)
            target = HoObject.from_dict(data["target"], key)
        else:
            source, target = _endpoints(arrows, key or default_block()[0])
        return cls(source, target, arrows)


def arrow(
    i: int, j: int, coeff: int = 1, key: BlockKey | None = None
) -> HoMorphism:
    """``coeff · f_ij : S(j) → S(i)`` as a morphism."""
    if key is None:
        key = default_block()[0]
    a = Arrow(S(j), S(i))
    return HoMorphism(
        HoObject.of(S(j), key=key), HoObject.of(S(i), key=key), ((a, coeff),)
    )


def identity(x: HoObject) -> HoMorphism:
    """Sum of the identity arrows of every summand copy of ``x``."""
    arrows = tuple(
        (Arrow(s, s, c, c), 1) for s, m in x.summands for c in range(m)
    )
    return HoMorphism(x, x, arrows)


def basis(x: HoObject, y: HoObject) -> list[Arrow]:
    """Basis arrows of ``[x, y]``, one per pair of summand copies."""
    if x.is_zero or y.is_zero or x.key != y.key:
        return []
    _check_hom_domain(x, y)
    return [
        Arrow(sx, sy, cx, cy)
        for sx, mx in x.summands
        for sy, my in y.summands
        if _arrow_exists(sx, sy)
        for cx in range(mx)
        for cy in range(my)
    ]


def compose(g: HoMorphism, f: HoMorphism) -> HoMorphism:
    """``g ∘ f``, bilinear in the arrows with ``f_ij ∘ f_jk = f_ik``."""
    if f.target != g.source:
        raise CompositionMismatch(
            f"Cannot compose: target {f.target} of the first morphism "
            f"differs from source {g.source} of the second."
        )
    coeffs: Counter[Arrow] = Counter()
    for af, cf in f.arrows:
        for ag, cg in g.arrows:
            if (af.target, af.target_copy) == (ag.source, ag.source_copy):
                a = Arrow(af.source, ag.target, af.source_copy, ag.target_copy)
                coeffs[a] += cf * cg
    return HoMorphism(f.source, g.target, tuple(coeffs.items()))


# ----------------------------------------------------------------------
# quotients and structure


def isogeny_image(x: HoObject) -> Counter[str]:
    """Image after inverting isogenies: parity counts ``{"ev", "odd"}``.

    The index is measured from the base of the block, so ``S(0)`` is even.
    ``EvenR`` summands become zero.
    """
    image: Counter[str] = Counter()
    for s, mult in x.summands:
        if s.kind is HoKind.S:
            image["odd" if s.a % 2 else "ev"] += mult
    return image


def ss_image(x: HoObject) -> Counter[Weight]:
    """Image in the semisimple quotient, labelled by atypical weights."""
    image: Counter[Weight] = Counter()
    for s, mult in x.summands:
        if s.kind is HoKind.S:
            image[weight_at(x.key, s.a)] += mult
    return image


def split_parity(x: HoObject) -> tuple[HoObject, HoObject]:
    """``(even part, odd part)`` of a sum of simples."""
    if x.has_even_r:
        raise UnsupportedHom(f"{x} has EvenR summands; only sums of S(i) split.")
    ev = tuple((s, m) for s, m in x.summands if s.a % 2 == 0)
    odd = tuple((s, m) for s, m in x.summands if s.a % 2)
    return HoObject(x.key, ev), HoObject(x.key, odd)


def module_end_dim(x: HoObject) -> int:
    """``dim End(X)`` in the module category, for a sum of simples."""
    if x.has_even_r:
        raise UnsupportedHom(f"{x} has EvenR summands; only sums of S(i) qualify.")
    return sum(m * m for _, m in x.summands)


def radical_dim(x: HoObject) -> int:
    """Dimension of the nilpotent part of ``[x, x]``.

    ``L(0) ⊕ L(-2)`` has ``[x, x]`` of dimension 3 and ``End(X)`` of
    dimension 2; the extra arrow ``f_{-2,0}`` is nilpotent.
    """
    return hom_dim(x, x) - module_end_dim(x)


def is_isomorphic(x: HoObject, y: HoObject) -> bool:
    """Isomorphism in the homotopy category."""
    if x.key != y.key:
        return x.is_zero and y.is_zero
    if x == y:
        return True
    if x.has_even_r or y.has_even_r:
        raise UnsupportedHom(
            f"Cannot decide whether {x} ≅ {y}: EvenR summands are only "
            "compared with themselves."
        )
    return False


def tensor_stub(x: HoObject, y: HoObject) -> HoObject:
    """Tensor product in the semisimple quotient.

    Only GL(1|1) is handled: the quotient is representations of a torus
    and atypical positions add.
    """
    if x.key.m != 1 or y.key.m != 1:
        raise NotImplementedError(
            "Tensor products of GL(m|1) homotopy objects need a mixed-tensor "
            "dictionary; only m = 1 is available."
        )
    if x.has_even_r or y.has_even_r:
        raise NotImplementedError("EvenR summands are zero in the quotient.")
    products: Counter[HoSummand] = Counter()
    for sx, mx in x.summands:
        for sy, my in y.summands:
            p = x.key.position(sx.a) + y.key.position(sy.a)
            products[S(x.key.index_of(p))] += mx * my
    return HoObject(x.key, tuple(products.items()))


def parse_morphism(text: str, key: BlockKey | None = None) -> HoMorphism:
    """Parse ``"f(0,2) + 2*f(0,4)"``, where ``f(i,j)`` is ``f_ij : S(j) → S(i)``.

    ``f(i,j;p,q)`` runs from copy ``p`` of ``S(j)`` to copy ``q`` of
    ``S(i)``.  The endpoints are the smallest sums holding every copy the
    arrows touch.
    """
    if key is None:
        key = default_block()[0]
    arrows = []
    for term in text.split("+"):
        match = _ARROW_RE.match(term.strip())
        if match is None:
            raise ParseError(
                f"Cannot parse {term.strip()!r}; expected f(i,j), optionally "
                "prefixed by 'k*'."
            )
        a = Arrow(
            S(int(match["j"])),
            S(int(match["i"])),
            int(match["p"] or 0),
            int(match["q"] or 0),
        )
        arrows.append((a, int(match["coeff"] or 1)))
    source, target = _endpoints(arrows, key)
    return HoMorphism(source, target, tuple(arrows))
