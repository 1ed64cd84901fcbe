"""
Acceptance suite run by ``gl-homotopy check``.

Each criterion is a function of the ``CHECKS`` block of iconfig.yml and a
seeded random generator.  It returns a one-line detail string or raises
:class:`~gl_homotopy.errors.CheckFailed`.

.. autosummary::
    ~CheckResult
    ~CRITERIA
    ~run_checks
    ~random_block_key
    ~random_block_object
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from typing import Any
from typing import NamedTuple

import numpy as np

from ..algebra.gl1block import BlockKey
from ..algebra.gl1block import block_deg
from ..algebra.gl1block import block_key
from ..algebra.gl1block import trivial_block
from ..algebra.gl1block import weight_at
from ..algebra.homotopy import HoObject
from ..algebra.homotopy import S
from ..algebra.homotopy import ho_lift
from ..algebra.homotopy import ho_reduce
from ..algebra.homotopy import hom_dim
from ..algebra.homotopy import isogeny_image
from ..algebra.homotopy import shift
from ..algebra.intervalcat import BlockObject
from ..algebra.intervalcat import Indec
from ..algebra.intervalcat import IndecKind
from ..algebra.intervalcat import classify_ideal
from ..algebra.intervalcat import twisted_dual
from ..algebra.kzero import KacFlagInput
from ..algebra.kzero import Term
from ..algebra.kzero import degree_filtration
from ..algebra.kzero import euler_check
from ..algebra.kzero import minimal_model_series
from ..algebra.labels import anti_kac
from ..algebra.labels import kac
from ..algebra.labels import simple
from ..algebra.partitions import box_partitions
from ..algebra.partitions import cauchy_check
from ..algebra.partitions import count_box_partitions
from ..algebra.partitions import count_self_conjugate
from ..algebra.partitions import count_self_conjugate_closed_form
from ..algebra.partitions import gl_dim
from ..algebra.partitions import lr_product
from ..algebra.partitions import lr_product_oracle
from ..algebra.partitions import vv_star_flag
from ..algebra.weights import Weight
from ..algebra.weights import block_invariant
from ..errors import CheckFailed
from ..utils.iconfig import config_section

logger = logging.getLogger(__name__)

__all__ = """
    CheckResult
    CRITERIA
    run_checks
    random_block_key
    random_block_object
""".split()

CRITERIA: dict[str, Callable[[dict[str, Any], np.random.Generator], str]] = {}


class CheckResult(NamedTuple):
    """Outcome of one criterion."""

    name: str
    passed: bool
    detail: str


def _criterion(name: str):
    """Register a check under ``name``."""

    def register(func):
        CRITERIA[name] = func
        return func

    return register


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailed(message)


def _span(cfg: dict[str, Any], key: str, default: tuple[int, int]) -> range:
    low, high = cfg.get(key, default)
    return range(int(low), int(high) + 1)


# ----------------------------------------------------------------------
# random inputs


def random_block_key(rng: np.random.Generator, m: int, spread: int = 6) -> BlockKey:
    """A GL(m|1) block with core labels drawn from ``[-spread, spread]``."""
    labels = rng.choice(np.arange(-spread, spread + 1), size=m, replace=False)
    core, base = labels[:-1], labels[-1]
    return BlockKey(m, frozenset(int(c) for c in core), int(base))


def random_block_object(
    rng: np.random.Generator, key: BlockKey, max_summands: int = 5
) -> BlockObject:
    """Random direct sum of ``R``, ``B``, ``P`` and ``L`` summands."""
    summands = []
    for _ in range(int(rng.integers(0, max_summands, endpoint=True))):
        kind = IndecKind(str(rng.choice(["R", "B", "P"])))
        a = int(rng.integers(-6, 6, endpoint=True))
        b = a if kind is IndecKind.P else a + int(rng.integers(0, 4, endpoint=True))
        summands.append((Indec(kind, a, b), int(rng.integers(1, 3, endpoint=True))))
    return BlockObject(key, tuple(summands))


# ----------------------------------------------------------------------
# criteria


@_criterion("hom-table")
def _hom_table(cfg, rng):
    key, _ = trivial_block(2)
    span = _span(cfg, "HOM_RANGE", (-10, 10))
    for i in span:
        for j in span:
            expected = int(i >= j and (i - j) % 2 == 0)
            got = hom_dim(
                HoObject.of(S(i), key=key), HoObject.of(S(j), key=key)
            )
            _expect(
                got == expected,
                f"[S({i}), S({j})] = {got}, expected {expected}",
            )
    return f"{len(span) ** 2} pairs"


@_criterion("vanishing")
def _vanishing(cfg, rng):
    key, _ = trivial_block(2)
    span = _span(cfg, "HOM_RANGE", (-10, 10))
    for i in span:
        x = HoObject.of(S(i), key=key)
        _expect(hom_dim(x, x) == 1, f"[S({i}), S({i})] != 1")
        for j in span:
            if j > i:
                y = HoObject.of(S(j), key=key)
                _expect(hom_dim(x, y) == 0, f"[S({i}), S({j})] != 0")
    return f"indices {span.start}..{span.stop - 1}"


@_criterion("minimal-model")
def _minimal_model(cfg, rng):
    depth = int(config_section("SERIES").get("DEFAULT_DEPTH", 10))
    span = _span(cfg, "SERIES_A_RANGE", (-5, 5))
    for a in span:
        key, _ = block_key(Weight(1, 1, (a, -a)))
        omega, kernel = minimal_model_series(key, 0, depth)
        expected = [Term(a - 2 * i, kac(-2 * i), 1) for i in range(depth + 1)]
        _expect(list(omega.terms) == expected, f"Ω(L({a}|{-a})) = {omega}")
        expected = [
            Term(a - 2 * i + 1, anti_kac(1 - 2 * i), 1)
            for i in range(1, depth + 1)
        ]
        _expect(
            list(kernel.terms) == expected,
            f"kernel of Ω(L({a}|{-a})) is {kernel}",
        )
    return f"a in {span.start}..{span.stop - 1}, N={depth}"


@_criterion("euler")
def _euler(cfg, rng):
    depth = int(config_section("SERIES").get("DEFAULT_DEPTH", 10))
    count = 0
    for m in cfg.get("EULER_RANKS", [1, 2, 3]):
        for _ in range(int(cfg.get("EULER_SAMPLES", 20))):
            key = random_block_key(rng, int(m))
            u = int(rng.integers(-5, 5, endpoint=True))
            result = euler_check(key, u, depth)
            expected = (Term(block_deg(key, u), simple(u), 1),)
            _expect(
                result.main.terms == expected,
                f"Euler difference over {key} at u={u} is {result.main}",
            )
            count += 1
    return f"{count} samples"


@_criterion("self-conjugate")
def _self_conjugate(cfg, rng):
    top = int(cfg.get("SELF_CONJUGATE_MAX_N", 12))
    for n in range(1, top + 1):
        _expect(
            count_box_partitions(n) == math.comb(2 * n, n),
            f"box count for n={n} is not C({2 * n},{n})",
        )
        got = count_self_conjugate(n)
        _expect(
            got == 2**n == count_self_conjugate_closed_form(n),
            f"{got} self-conjugate partitions for n={n}",
        )
    return f"n <= {top}"


@_criterion("cauchy")
def _cauchy(cfg, rng):
    top = int(cfg.get("CAUCHY_MAX_N", 5))
    for n in range(1, top + 1):
        _, total = cauchy_check(n)
        _expect(total == 2 ** (n * n), f"Cauchy total {total} for n={n}")
    return f"n <= {top}"


@_criterion("vv-star")
def _vv_star(cfg, rng):
    top = int(cfg.get("VV_STAR_MAX_N", 6))
    for n in range(1, top + 1):
        flag = vv_star_flag(n)
        maximal = [e.degree for e in flag if e.is_max_atypical]
        _expect(len(flag) == math.comb(2 * n, n), f"flag size for n={n}")
        _expect(len(maximal) == 2**n, f"{len(maximal)} maximal pieces for n={n}")
        _expect(
            all(-2 * n * n <= e.degree <= -n * n for e in flag),
            f"degree out of range for n={n}",
        )
        _expect(min(maximal) == -2 * n * n, f"socle degree for n={n}")
    return f"n <= {top}"


@_criterion("reduce")
def _reduce(cfg, rng):
    samples = int(cfg.get("REDUCE_SAMPLES", 1000))
    for _ in range(samples):
        key = random_block_key(rng, int(rng.integers(1, 3, endpoint=True)))
        x = random_block_object(rng, key)
        y = ho_reduce(x)
        _expect(ho_reduce(ho_lift(y)) == y, f"ho_reduce not idempotent on {x}")
        for indec, _ in x.summands:
            image = ho_reduce(BlockObject(key, ((indec, 1),)))
            odd = indec.length % 2 == 1
            if indec.kind is IndecKind.P or (indec.kind is IndecKind.B and not odd):
                _expect(image.is_zero, f"{indec} survives reduction")
            elif indec.kind is IndecKind.B:
                _expect(image == HoObject.of(S(indec.b), key=key), f"{indec}")
            elif odd:
                _expect(image == HoObject.of(S(indec.a), key=key), f"{indec}")
        dual = twisted_dual(x)
        _expect(twisted_dual(dual) == x, f"twisted dual of {x} is not involutive")
        cls, dcls = classify_ideal(x), classify_ideal(dual)
        _expect(
            (cls.in_Tplus, cls.in_Tminus) == (dcls.in_Tminus, dcls.in_Tplus),
            f"twisted dual of {x} does not swap 𝒯₊ and 𝒯₋",
        )
    return f"{samples} objects"


@_criterion("shift")
def _shift(cfg, rng):
    key, _ = trivial_block(1)
    span = _span(cfg, "SHIFT_RANGE", (-5, 5))
    for _ in range(50):
        x = HoObject(key, tuple((S(int(i)), 1) for i in rng.integers(-8, 8, 3)))
        y = HoObject(key, tuple((S(int(i)), 1) for i in rng.integers(-8, 8, 2)))
        base = hom_dim(x, y)
        for k in span:
            _expect(
                hom_dim(shift(x, k), shift(y, k)) == base,
                f"hom_dim changes under shift by {k}",
            )
        _expect(shift(shift(x, 1), -1) == x, f"shift round trip fails on {x}")
        image, shifted = isogeny_image(x), isogeny_image(shift(x, 1))
        _expect(
            (image["ev"], image["odd"]) == (shifted["odd"], shifted["ev"]),
            f"shift does not flip parity of {x}",
        )
    return f"k in {span.start}..{span.stop - 1}"


@_criterion("filtration")
def _filtration(cfg, rng):
    key, _ = block_key(Weight(1, 1, (0, 0)))
    got = degree_filtration(KacFlagInput(((kac(0), 0), (kac(1), 1))), key)
    _expect(got == [(1, (kac(1),)), (0, (kac(0),))], f"P(0) flag groups as {got}")
    prefix = KacFlagInput(tuple((kac(-2 * i), -2 * i) for i in range(3)))
    got = degree_filtration(prefix, key)
    _expect(
        [d for d, _ in got] == [0, -2, -4] and all(len(g) == 1 for _, g in got),
        f"Ω prefix groups as {got}",
    )
    samples = int(cfg.get("FILTRATION_SAMPLES", 200))
    for _ in range(samples):
        entries = [
            (kac(int(i)), block_deg(key, int(i)))
            for i in rng.integers(-4, 4, size=6)
        ]
        expected = degree_filtration(KacFlagInput(tuple(entries)), key)
        rng.shuffle(entries)
        got = degree_filtration(KacFlagInput(tuple(entries)), key)
        _expect(got == expected, "filtration depends on input order")
    return f"{samples} permuted flags"


@_criterion("littlewood-richardson")
def _littlewood_richardson(cfg, rng):
    size = int(cfg.get("LR_MAX_SIZE", 6))
    k = int(cfg.get("LR_VARIABLES", 4))
    shapes = [a for a in box_partitions(size) if sum(a) <= size]
    pairs = 0
    for lam_pos, lam in enumerate(shapes):
        for mu in shapes[lam_pos:]:
            if len(lam) > k or len(mu) > k:
                continue
            product = lr_product(lam, mu, max_rows=k)
            oracle = lr_product_oracle(lam, mu, k)
            _expect(product == oracle, f"s{lam}·s{mu}: {product} != {oracle}")
            pairs += 1
            if sum(lam) + sum(mu) <= 8:
                lhs = sum(c * gl_dim(nu, k) for nu, c in product.items())
                _expect(
                    lhs == gl_dim(lam, k) * gl_dim(mu, k),
                    f"dimension identity fails for {lam}, {mu}",
                )
    return f"{pairs} pairs in {k} variables"


@_criterion("block-geometry")
def _block_geometry(cfg, rng):
    samples = int(cfg.get("BLOCK_SAMPLES", 500))
    top = int(cfg.get("BLOCK_MAX_RANK", 4))
    span = _span(cfg, "HOM_RANGE", (-10, 10))
    for _ in range(samples):
        key = random_block_key(rng, int(rng.integers(1, top, endpoint=True)))
        w = weight_at(key, int(rng.integers(-10, 10, endpoint=True)))
        found, index = block_key(w)
        _expect(weight_at(found, index) == w, f"block_key round trip fails on {w}")
        _expect(found.core == key.core, f"{w} lands in the wrong block")
    key = random_block_key(rng, top)
    degrees = [block_deg(key, i) for i in span]
    _expect(
        all(a < b for a, b in zip(degrees, degrees[1:], strict=False)),
        f"block_deg not increasing over {key}",
    )
    invariants = {block_invariant(weight_at(key, i)) for i in span}
    _expect(len(invariants) == 1, f"block invariant varies over {key}")
    return f"{samples} weights"


# ----------------------------------------------------------------------


def run_checks(
    names: list[str] | None = None, cfg: dict[str, Any] | None = None
) -> list[CheckResult]:
    """Run the named criteria (all by default) in registry order."""
    if cfg is None:
        cfg = config_section("CHECKS")
    if names is None:
        names = list(CRITERIA)
    unknown = [n for n in names if n not in CRITERIA]
    if unknown:
        raise LookupError(
            f"Unknown check(s) {unknown}; choose from {sorted(CRITERIA)}."
        )
    results = []
    for name in names:
        rng = np.random.default_rng(int(cfg.get("SEED", 0)))
        try:
            detail = CRITERIA[name](cfg, rng)
            results.append(CheckResult(name, True, detail))
            logger.info("check %s passed: %s", name, detail)
        except CheckFailed as exc:
            results.append(CheckResult(name, False, str(exc)))
            logger.warning("check %s failed: %s", name, exc)
    return results
