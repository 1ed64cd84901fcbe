"""
Partition combinatorics behind ``V ⊗ V*`` and ``Λ(M_nn)``.

Partitions are tuples of positive integers in weakly decreasing order;
``()`` is the empty partition.  Enumerations are ordered by size and then
reverse-lexicographically, so ``box_partitions(2)`` is
``(), (1,), (2,), (1, 1), (2, 1), (2, 2)``.

.. autosummary::
    ~partition
    ~transpose
    ~is_self_conjugate
    ~iter_box_partitions
    ~box_partitions
    ~count_box_partitions
    ~iter_self_conjugate
    ~count_self_conjugate
    ~count_self_conjugate_closed_form
    ~gl_dim
    ~cauchy_check
    ~lr_product
    ~lr_mult
    ~schur_polynomial
    ~lr_product_oracle
    ~vv_star_flag
    ~weight_estimate
"""

from __future__ import annotations

import functools
import itertools
import logging
import math
from collections.abc import Iterable
from collections.abc import Iterator
from typing import NamedTuple

import lrcalc
import sympy

from ..errors import InvalidPartition
from ..errors import TooManyRows
from .weights import Weight
from .weights import deg_bidegree

logger = logging.getLogger(__name__)

__all__ = """
    Partition
    FlagEntry
    DegreeBounds
    partition
    transpose
    is_self_conjugate
    iter_box_partitions
    box_partitions
    count_box_partitions
    iter_self_conjugate
    count_self_conjugate
    count_self_conjugate_closed_form
    gl_dim
    cauchy_check
    lr_product
    lr_mult
    schur_polynomial
    lr_product_oracle
    vv_star_flag
    weight_estimate
""".split()

Partition = tuple[int, ...]


class FlagEntry(NamedTuple):
    """One Kac piece of ``V ⊗ V*``."""

    alpha: Partition
    is_max_atypical: bool
    degree: int


class DegreeBounds(NamedTuple):
    """Closed degree interval ``[low, high]``."""

    low: int
    high: int


def partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and drop trailing zeros."""
    try:
        parts = tuple(int(p) for p in parts)
    except (TypeError, ValueError) as exc:
        raise InvalidPartition(f"Partition {parts!r} has a non-integer part.") from exc
    if any(p < 0 for p in parts):
        raise InvalidPartition(f"Partition {parts} has a negative part.")
    if any(a < b for a, b in zip(parts, parts[1:], strict=False)):
        raise InvalidPartition(f"Partition {parts} is not weakly decreasing.")
    return tuple(p for p in parts if p)


def transpose(alpha: Partition) -> Partition:
    """Conjugate partition."""
    alpha = partition(alpha)
    if not alpha:
        return ()
    return tuple(sum(1 for a in alpha if a > j) for j in range(alpha[0]))


def is_self_conjugate(alpha: Partition) -> bool:
    """``α == αᵀ``."""
    return partition(alpha) == transpose(alpha)


def _partitions_of(size: int, max_part: int, max_rows: int) -> Iterator[Partition]:
    """Partitions of ``size`` inside a box, in reverse-lexicographic order."""
    if size == 0:
        yield ()
        return
    if max_rows == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in _partitions_of(size - first, first, max_rows - 1):
            yield (first, *rest)


def iter_box_partitions(n: int) -> Iterator[Partition]:
    """Lazily enumerate the ``n × n`` box in the order of :func:`box_partitions`."""
    if n < 1:
        raise InvalidPartition(f"Box size must be positive, got {n}.")
    for size in range(n * n + 1):
        yield from _partitions_of(size, n, n)


def box_partitions(n: int) -> list[Partition]:
    """All partitions in the ``n × n`` box; there are ``C(2n, n)``."""
    return list(iter_box_partitions(n))


@functools.lru_cache(maxsize=None)
def _count_partitions(size: int, max_part: int, max_rows: int) -> int:
    """Length of ``_partitions_of(size, max_part, max_rows)``."""
    if size == 0:
        return 1
    if max_rows == 0:
        return 0
    return sum(
        _count_partitions(size - first, first, max_rows - 1)
        for first in range(min(size, max_part), 0, -1)
    )


def count_box_partitions(n: int) -> int:
    """Number of partitions in the ``n × n`` box, by the enumeration recursion."""
    if n < 1:
        raise InvalidPartition(f"Box size must be positive, got {n}.")
    return sum(_count_partitions(size, n, n) for size in range(n * n + 1))


def _from_hooks(arms: tuple[int, ...]) -> Partition:
    """Self-conjugate partition with Frobenius coordinates ``(arms | arms)``."""
    rows = [a + i + 1 for i, a in enumerate(arms)]
    depth = len(arms)
    tail = []
    for r in range(depth, rows[0] if rows else 0):
        # columns of the diagonal hooks reaching below the Durfee square
        tail.append(sum(1 for i, a in enumerate(arms) if a + i >= r))
    return partition(rows + [t for t in tail if t])


def iter_self_conjugate(n: int) -> Iterator[Partition]:
    """Self-conjugate partitions in the ``n × n`` box, built from diagonal hooks.

    A choice of strictly decreasing arm lengths ``n-1 >= a_1 > a_2 > …``
    fixes one partition.
    """
    if n < 1:
        raise InvalidPartition(f"Box size must be positive, got {n}.")
    for depth in range(n + 1):
        for arms in itertools.combinations(range(n - 1, -1, -1), depth):
            alpha = _from_hooks(arms)
            if not is_self_conjugate(alpha) or (alpha and alpha[0] > n):
                raise ArithmeticError(f"Hooks {arms} give {alpha}.")
            yield alpha


def count_self_conjugate(n: int) -> int:
    """Number of self-conjugate partitions in the ``n × n`` box, by enumeration."""
    return sum(1 for _ in iter_self_conjugate(n))


def count_self_conjugate_closed_form(n: int) -> int:
    """``2**n``: a self-conjugate partition in the box is a set of hooks."""
    if n < 1:
        raise InvalidPartition(f"Box size must be positive, got {n}.")
    return 2**n


def gl_dim(alpha: Partition, n: int) -> int:
    """Dimension of the irreducible GL(n) representation with highest weight α."""
    alpha = partition(alpha)
    if len(alpha) > n:
        raise TooManyRows(
            f"Partition {alpha} has {len(alpha)} rows; GL({n}) allows at most {n}."
        )
    lam = alpha + (0,) * (n - len(alpha))
    num = math.prod(
        lam[i] - lam[j] + j - i for i in range(n) for j in range(i + 1, n)
    )
    den = math.prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def cauchy_check(n: int) -> tuple[list[tuple[Partition, Partition]], int]:
    """Pairs ``(α, αᵀ)`` over the box and ``Σ dim ρ_α · dim ρ_αᵀ``.

    The total is ``dim Λ(M_nn) = 2**(n*n)``.
    """
    pairs = [(alpha, transpose(alpha)) for alpha in box_partitions(n)]
    total = sum(gl_dim(a, n) * gl_dim(b, n) for a, b in pairs)
    logger.debug("cauchy_check(%d): %d pairs, total %d", n, len(pairs), total)
    return pairs, total


# ----------------------------------------------------------------------
# Littlewood-Richardson


def lr_product(
    lam: Partition, mu: Partition, max_rows: int | None = None
) -> dict[Partition, int]:
    """``{ν: c^ν_{λμ}}``, optionally keeping only ν with ``max_rows`` rows."""
    lam = partition(lam)
    mu = partition(mu)
    if max_rows is None:
        product = lrcalc.mult(list(lam), list(mu))
    else:
        product = lrcalc.mult(list(lam), list(mu), max_rows)
    return dict(sorted((partition(nu), int(c)) for nu, c in product.items()))


def lr_mult(lam: Partition, mu: Partition, nu: Partition) -> int:
    """``c^ν_{λμ}``; zero unless ``|ν| = |λ| + |μ|``."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    return int(lrcalc.lrcoef(list(nu), list(lam), list(mu)))


@functools.lru_cache(maxsize=None)
def _variables(k: int) -> tuple[sympy.Symbol, ...]:
    return sympy.symbols(f"x0:{k}")


@functools.lru_cache(maxsize=None)
def schur_polynomial(alpha: Partition, k: int) -> sympy.Poly:
    """Schur polynomial ``s_α(x_0, …, x_{k-1})`` as the bialternant ratio.

    Zero when α has more than ``k`` rows.
    """
    alpha = partition(alpha)
    xs = _variables(k)
    if len(alpha) > k:
        return sympy.Poly(0, *xs)
    lam = alpha + (0,) * (k - len(alpha))
    numerator = sympy.Matrix(
        k, k, lambda i, j: xs[j] ** (lam[i] + k - 1 - i)
    ).det(method="berkowitz")
    vandermonde = sympy.Matrix(k, k, lambda i, j: xs[j] ** (k - 1 - i)).det(
        method="berkowitz"
    )
    quotient, remainder = sympy.div(
        sympy.Poly(numerator, *xs), sympy.Poly(vandermonde, *xs)
    )
    if not remainder.is_zero:
        raise ArithmeticError(f"Bialternant of {alpha} is not divisible.")
    return quotient


def lr_product_oracle(
    lam: Partition, mu: Partition, k: int
) -> dict[Partition, int]:
    """Expand ``s_λ s_μ`` in ``k`` variables back into Schur polynomials.

    The lex-leading monomial of a symmetric polynomial is a dominant
    weight; peel off one Schur polynomial at a time.
    """
    product = schur_polynomial(partition(lam), k) * schur_polynomial(
        partition(mu), k
    )
    result: dict[Partition, int] = {}
    while not product.is_zero:
        exponents, coeff = product.terms()[0]
        nu = partition(exponents)
        result[nu] = int(coeff)
        product = product - schur_polynomial(nu, k) * int(coeff)
    return dict(sorted(result.items()))


# ----------------------------------------------------------------------
# V ⊗ V*


def vv_star_flag(n: int) -> list[FlagEntry]:
    """Kac flag of ``V ⊗ V*`` for GL(n|n), one piece per box partition.

    The piece ``α`` sits at degree ``-n² - |α|`` and is maximally
    atypical exactly when ``α`` is self-conjugate; those ``2**n`` pieces
    form the flag of ``P(Ber^{-n})``.
    """
    return [
        FlagEntry(alpha, is_self_conjugate(alpha), -n * n - sum(alpha))
        for alpha in box_partitions(n)
    ]


def weight_estimate(n: int) -> dict[str, DegreeBounds]:
    """Degree ranges of composition factors of ``I ⊗ I*`` and ``V ⊗ I ⊗ I*``.

    ``I`` is the kernel of ``V(1) → 1``.  The lowest factor is the socle
    ``Ber^{-2n}`` of ``P(Ber^{-n})``, the lowest maximally atypical piece
    of :func:`vv_star_flag`.  The highest ones sit in the second radical
    layer of ``V(0,…,0,-1)``, whose top is missing from ``I ⊗ I*``.
    Tensoring with ``V`` lowers degrees by at most the depth of the
    ``α = ∅`` piece.
    """
    if n < 1:
        raise InvalidPartition(f"GL(n|n) needs n >= 1, got {n}.")
    flag = vv_star_flag(n)
    low = min(e.degree for e in flag if e.is_max_atypical)
    second_layer = [(0,) * (n - 1) + (-2,)]
    if n > 1:
        second_layer.append((0,) * (n - 2) + (-1, -1))
    high = max(
        deg_bidegree(Weight.from_parts(even, (0,) * n)).deg
        for even in second_layer
    )
    depth = max(e.degree for e in flag if not e.alpha)
    return {
        "I⊗I*": DegreeBounds(low, high),
        "V⊗I⊗I*": DegreeBounds(low + depth, high),
    }
