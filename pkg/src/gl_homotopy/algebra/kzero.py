"""
Truncated power series over the Grothendieck ring of a GL(m|1) block.

A series is a finite sum of terms ``c · [X] q^d`` where ``X`` is a Kac
label ``V(i)``, an anti-Kac label ``V(i)*`` or a simple label ``L(i)``
depending on the variant.  The exponent is the degree of the label's
highest weight, ``q^{block_deg(i)}``.  A series carries an optional
truncation degree: below it nothing is recorded.

.. autosummary::
    ~Variant
    ~Term
    ~KSeries
    ~KacFlagInput
    ~EulerResult
    ~expand_to_simples
    ~minimal_model_series
    ~euler_check
    ~degree_filtration
    ~dual_series
    ~growth_class
    ~object_series
    ~kernel_simple_content
    ~parse_flag
"""

from __future__ import annotations

import enum
import itertools
import logging
import re
from collections import Counter
from collections import defaultdict
from dataclasses import dataclass
from dataclasses import replace
from typing import Any
from typing import NamedTuple

from ..errors import InvalidSeries
from ..errors import NoFlag
from ..errors import ParseError
from ..errors import UnknownBlock
from .gl1block import BlockKey
from .gl1block import block_deg
from .intervalcat import BlockObject
from .intervalcat import classify_ideal
from .intervalcat import kac_flag
from .labels import Label
from .labels import LabelKind
from .labels import anti_kac
from .labels import kac
from .labels import parse_label
from .labels import simple

logger = logging.getLogger(__name__)

__all__ = """
    Variant
    Term
    KSeries
    KacFlagInput
    EulerResult
    expand_to_simples
    minimal_model_series
    euler_check
    degree_filtration
    dual_series
    growth_class
    object_series
    kernel_simple_content
    parse_flag
""".split()

_FLAG_ENTRY_RE = re.compile(r"(V\(\s*-?\d+\s*\)\*?)\s*@\s*(-?\d+)")


class Variant(str, enum.Enum):
    """Which labels a series is written in."""

    KAC_PLUS = "KacPlus"
    KAC_MINUS = "KacMinus"
    SIMPLE = "Simple"


_VARIANT_KIND = {
    Variant.KAC_PLUS: LabelKind.KAC,
    Variant.KAC_MINUS: LabelKind.ANTI_KAC,
    Variant.SIMPLE: LabelKind.SIMPLE,
}


class Term(NamedTuple):
    """``coeff · [label] q^deg``."""

    deg: int
    label: Label
    coeff: int


@dataclass(frozen=True)
class KSeries:
    """Truncated series ``Σ c [X] q^d`` of one variant."""

    variant: Variant
    terms: tuple[Term, ...] = ()
    key: BlockKey | None = None
    truncation: int | None = None

    def __post_init__(self) -> None:
        """Merge equal terms, drop zeros and anything below the truncation."""
        kind = _VARIANT_KIND[Variant(self.variant)]
        object.__setattr__(self, "variant", Variant(self.variant))
        coeffs: Counter[tuple[int, Label]] = Counter()
        for deg, label, coeff in self.terms:
            if label.kind is not kind:
                raise InvalidSeries(
                    f"Label {label} does not belong to a {self.variant.value} "
                    "series."
                )
            if self.truncation is not None and deg < self.truncation:
                continue
            coeffs[(int(deg), label)] += int(coeff)
        terms = tuple(
            Term(d, label, c)
            for (d, label), c in sorted(
                coeffs.items(), key=lambda kv: (-kv[0][0], kv[0][1])
            )
            if c
        )
        object.__setattr__(self, "terms", terms)

    # ------------------------------------------------------------------
    # arithmetic

    def _combine(self, other: KSeries, sign: int) -> KSeries:
        if other.variant is not self.variant:
            raise InvalidSeries(
                f"Cannot combine {self.variant.value} and "
                f"{other.variant.value} series."
            )
        if None not in (self.key, other.key) and self.key != other.key:
            raise InvalidSeries(
                f"Series over blocks {self.key} and {other.key} do not mix."
            )
        bounds = [t for t in (self.truncation, other.truncation) if t is not None]
        return KSeries(
            self.variant,
            self.terms + tuple(Term(d, x, sign * c) for d, x, c in other.terms),
            self.key if self.key is not None else other.key,
            max(bounds) if bounds else None,
        )

    def __add__(self, other: KSeries) -> KSeries:
        """Sum; the result is truncated at the larger truncation."""
        if not isinstance(other, KSeries):
            return NotImplemented
        return self._combine(other, 1)

    def __sub__(self, other: KSeries) -> KSeries:
        """Difference."""
        if not isinstance(other, KSeries):
            return NotImplemented
        return self._combine(other, -1)

    def __neg__(self) -> KSeries:
        """Negation."""
        return self * -1

    def __mul__(self, k: int) -> KSeries:
        """Scalar multiple."""
        if not isinstance(k, int):
            return NotImplemented
        terms = tuple(Term(d, x, c * k) for d, x, c in self.terms)
        return replace(self, terms=terms)

    __rmul__ = __mul__

    def shift(self, k: int) -> KSeries:
        """Multiply by ``q^k``."""
        return replace(
            self,
            terms=tuple(Term(d + k, x, c) for d, x, c in self.terms),
            truncation=None if self.truncation is None else self.truncation + k,
        )

    def truncate(self, d_min: int) -> KSeries:
        """Forget all terms of degree below ``d_min``."""
        if self.truncation is not None:
            d_min = max(d_min, self.truncation)
        return replace(self, truncation=d_min)

    def untruncated(self) -> KSeries:
        """The same finite sum, read as an exact polynomial."""
        return replace(self, truncation=None)

    # ------------------------------------------------------------------
    # inspection

    @property
    def is_zero(self) -> bool:
        """True when no term survives."""
        return not self.terms

    @property
    def leading_degree(self) -> int | None:
        """Largest degree with a nonzero coefficient (``d_max``)."""
        return self.terms[0].deg if self.terms else None

    def degrees(self) -> list[int]:
        """Distinct degrees, decreasing."""
        return sorted({t.deg for t in self.terms}, reverse=True)

    def coefficient(self, d: int) -> dict[Label, int]:
        """Coefficient of ``q^d`` as ``{label: coeff}``."""
        if self.truncation is not None and d < self.truncation:
            raise InvalidSeries(
                f"Degree {d} lies below the truncation {self.truncation}."
            )
        return {t.label: t.coeff for t in self.terms if t.deg == d}

    def __str__(self) -> str:
        """``[V(0)]q^0 - 2[V(-2)]q^-2 + O(q^-4)``."""
        if not self.terms:
            text = "0"
        else:
            parts = []
            for deg, label, coeff in self.terms:
                mag = "" if abs(coeff) == 1 else str(abs(coeff))
                sign = "-" if coeff < 0 else "+"
                parts.append(f"{sign} {mag}[{label}]q^{deg}")
            text = " ".join(parts)
            text = text[2:] if text.startswith("+ ") else "-" + text[2:]
        if self.truncation is not None:
            text += f" + O(q^{self.truncation - 1})"
        return text

    def to_dict(self) -> dict[str, Any]:
        """JSON form."""
        return {
            "variant": self.variant.value,
            "block": None if self.key is None else self.key.to_dict(),
            "terms": [
                {"deg": d, "label": str(x), "coeff": c} for d, x, c in self.terms
            ],
            "truncation": self.truncation,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> KSeries:
        """Inverse of :meth:`to_dict`."""
        try:
            variant = Variant(data["variant"])
            terms = tuple(
                Term(int(t["deg"]), parse_label(t["label"]), int(t.get("coeff", 1)))
                for t in data.get("terms", [])
            )
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"Bad series record: {exc}") from exc
        block = data.get("block")
        key = BlockKey.from_dict(block) if block else None
        return cls(variant, terms, key, data.get("truncation"))


@dataclass(frozen=True)
class KacFlagInput:
    """Multiset of ``(Kac or anti-Kac label, degree)`` pairs."""

    entries: tuple[tuple[Label, int], ...]

    def __post_init__(self) -> None:
        """Reject simple labels."""
        entries = tuple((label, int(d)) for label, d in self.entries)
        for label, _ in entries:
            if label.kind is LabelKind.SIMPLE:
                raise InvalidSeries(f"{label} is not a Kac or anti-Kac label.")
        object.__setattr__(self, "entries", entries)


class EulerResult(NamedTuple):
    """Euler difference split at its truncation bound."""

    main: KSeries
    tail: KSeries
    bound: int


def parse_flag(text: str) -> KacFlagInput:
    """Parse ``"V(1)@1, V(0)@0"``."""
    matches = _FLAG_ENTRY_RE.findall(text)
    stripped = _FLAG_ENTRY_RE.sub("", text).replace(",", "").strip()
    if not matches or stripped:
        raise ParseError(
            f"Flag {text!r} must be a comma-separated list like 'V(1)@1, V(0)*@0'."
        )
    return KacFlagInput(tuple((parse_label(x), int(d)) for x, d in matches))


# ----------------------------------------------------------------------
# operations


def expand_to_simples(s: KSeries) -> KSeries:
    """Replace ``q^d [V(i)]`` by ``q^d [L(i)] + q^{d-δ} [L(i-1)]``.

    ``δ`` is the degree gap ``block_deg(i) - block_deg(i-1)``; anti-Kac
    labels expand the same way.
    """
    if s.variant is Variant.SIMPLE:
        raise InvalidSeries("Series is already written in simple labels.")
    if s.key is None:
        raise UnknownBlock(
            "Expanding Kac labels needs the block key to find the degree of "
            "the socle."
        )
    terms = []
    for deg, label, coeff in s.terms:
        i = label.index
        delta = block_deg(s.key, i) - block_deg(s.key, i - 1)
        terms.append(Term(deg, simple(i), coeff))
        terms.append(Term(deg - delta, simple(i - 1), coeff))
    return KSeries(Variant.SIMPLE, tuple(terms), s.key, s.truncation)


def minimal_model_series(key: BlockKey, u: int, N: int) -> tuple[KSeries, KSeries]:
    """Series of the minimal model ``Ω L(u)`` and of its kernel.

    ``Ω = Σ_{i=0..N} [V(u-2i)] q^{deg(u-2i)}`` and the kernel is
    ``Σ_{i=1..N} [V(u-2i+1)*] q^{deg(u-2i+1)}``, both truncated at
    ``deg(u-2N)``.
    """
    if N < 1:
        raise InvalidSeries(f"Truncation depth N must be >= 1, got {N}.")
    bound = block_deg(key, u - 2 * N)
    omega = KSeries(
        Variant.KAC_PLUS,
        tuple(
            Term(block_deg(key, u - 2 * i), kac(u - 2 * i), 1)
            for i in range(N + 1)
        ),
        key,
        bound,
    )
    kernel = KSeries(
        Variant.KAC_MINUS,
        tuple(
            Term(block_deg(key, u - 2 * i + 1), anti_kac(u - 2 * i + 1), 1)
            for i in range(1, N + 1)
        ),
        key,
        bound,
    )
    logger.debug("minimal model of L(%d) over %s to depth %d", u, key, N)
    return omega, kernel


def euler_check(key: BlockKey, u: int, N: int) -> EulerResult:
    """``[Ω] - [kernel]`` in simple labels, split at ``deg(u) - 2N``.

    The main part is ``[L(u)] q^{deg(u)}``; the tail holds the boundary
    term of the finite telescoping sum.
    """
    omega, kernel = minimal_model_series(key, u, N)
    diff = expand_to_simples(omega.untruncated()) - expand_to_simples(
        kernel.untruncated()
    )
    bound = block_deg(key, u) - 2 * N
    main = diff.truncate(bound)
    tail = KSeries(
        Variant.SIMPLE, tuple(t for t in diff.terms if t.deg < bound), key
    )
    return EulerResult(main, tail, bound)


def degree_filtration(
    flag: KacFlagInput, key: BlockKey | None = None
) -> list[tuple[int, tuple[Label, ...]]]:
    """Group a Kac flag by degree; highest degree at the bottom.

    With ``key`` given, each degree must equal the block degree of its label.
    """
    if not flag.entries:
        raise InvalidSeries("Degree filtration of an empty flag.")
    groups: dict[int, list[Label]] = defaultdict(list)
    for label, deg in flag.entries:
        if key is not None and block_deg(key, label.index) != deg:
            raise InvalidSeries(
                f"{label}@{deg} disagrees with its block degree "
                f"{block_deg(key, label.index)}."
            )
        groups[deg].append(label)
    return [(d, tuple(sorted(groups[d]))) for d in sorted(groups, reverse=True)]


def dual_series(s: KSeries) -> KSeries:
    """Twisted dual: ``V(i) ↔ V(i)*``; simple series are fixed."""
    if s.variant is Variant.SIMPLE:
        return s
    variant = (
        Variant.KAC_MINUS if s.variant is Variant.KAC_PLUS else Variant.KAC_PLUS
    )
    return KSeries(
        variant,
        tuple(Term(d, x.dual(), c) for d, x, c in s.terms),
        s.key,
        s.truncation,
    )


def growth_class(s: KSeries) -> str:
    """``"finite"``, ``"pol"`` or ``"fin"`` bookkeeping label.

    An untruncated series is a polynomial.  A truncated series is ``pol``
    when its graded pieces never grow in length as the degree falls,
    otherwise ``fin``.
    """
    if s.truncation is None:
        return "finite"
    lengths = [
        sum(abs(t.coeff) * len(t.label.factors()) for t in group)
        for _, group in itertools.groupby(s.terms, key=lambda t: t.deg)
    ]
    if all(a >= b for a, b in zip(lengths, lengths[1:], strict=False)):
        return "pol"
    return "fin"


def object_series(x: BlockObject) -> KSeries:
    """Kac-flag series of an object of 𝒯₊ at block degrees."""
    if not classify_ideal(x).in_Tplus:
        raise NoFlag(f"{x} is not in 𝒯₊; it has no Kac flag.")
    terms = []
    for indec, mult in x.summands:
        for label in kac_flag(indec).kac:
            terms.append(Term(block_deg(x.key, label.index), label, mult))
    return KSeries(Variant.KAC_PLUS, tuple(terms), x.key)


def kernel_simple_content(key: BlockKey, u: int, N: int) -> KSeries:
    """Simple constituents ``L(u-2i+1), L(u-2i)``, ``i = 1..N``, of the kernel."""
    _, kernel = minimal_model_series(key, u, N)
    return expand_to_simples(kernel.untruncated())
