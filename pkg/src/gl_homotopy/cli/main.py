"""
Command line front end: ``gl-homotopy <subcommand> <action> …``.

Every action prints a text rendering by default and the same data as
JSON with ``--json``.  Exit status is 0 on success, 2 on input errors and
3 when an acceptance check fails.

.. autosummary::
    ~build_parser
    ~run
    ~main
"""

from __future__ import annotations

import argparse
import logging
import re
import sys
from collections.abc import Callable
from typing import Any
from typing import NamedTuple
from typing import TextIO

from pandas import DataFrame

from ..algebra import gl1block
from ..algebra import homotopy
from ..algebra import intervalcat
from ..algebra import kzero
from ..algebra import partitions
from ..algebra import weights
from ..algebra.labels import simple
from ..errors import GLHomotopyError
from ..errors import NoFlag
from ..errors import ParseError
from ..utils.codecs import dumps
from ..utils.codecs import load_payload
from ..utils.codecs import parse_int_list
from ..utils.codecs import parse_range
from ..utils.codecs import read_payload
from ..utils.iconfig import config_section
from ..utils.iconfig import load_iconfig
from ..utils.logging_helper import set_level
from ..utils.logging_helper import setup_logging
from .checks import CRITERIA
from .checks import run_checks

logger = logging.getLogger(__name__)

__all__ = """
    Output
    build_parser
    run
    main
""".split()

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CHECK = 3


class Output(NamedTuple):
    """Result of one action: JSON data, text rendering and exit status."""

    data: Any
    text: str
    status: int = EXIT_OK


def _table(rows: list[dict[str, Any]]) -> str:
    """Aligned text table."""
    if not rows:
        return "(empty)"
    return DataFrame(rows).to_string(index=False)


def _fields(data: dict[str, Any]) -> str:
    width = max(len(k) for k in data)
    return "\n".join(f"{k:<{width}}  {v}" for k, v in data.items())


# ----------------------------------------------------------------------
# input helpers


def _key(args: argparse.Namespace) -> gl1block.BlockKey:
    """Block from ``--weight`` or ``--core``/``--base``, else the default."""
    if getattr(args, "weight", None):
        return gl1block.block_key(weights.parse_weight(args.weight))[0]
    if getattr(args, "base", None) is not None:
        core = frozenset(parse_int_list(args.core or ""))
        return gl1block.BlockKey(len(core) + 1, core, args.base)
    if getattr(args, "core", None):
        raise ParseError("--core needs --base to fix the block.")
    return gl1block.default_block()[0]


def _block_object(args: argparse.Namespace, text: str) -> intervalcat.BlockObject:
    text = read_payload(text, args.stdin)
    data = load_payload(text)
    if data is not None:
        return intervalcat.BlockObject.from_dict(data, _key(args))
    return intervalcat.parse_object(text, _key(args))


def _ho_object(args: argparse.Namespace, text: str) -> homotopy.HoObject:
    """Homotopy object; module notation is reduced first."""
    text = read_payload(text, args.stdin)
    data = load_payload(text)
    key = _key(args)
    if data is not None:
        return homotopy.HoObject.from_dict(data, key)
    try:
        return homotopy.parse_ho_object(text, key)
    except ParseError:
        return homotopy.ho_reduce(intervalcat.parse_object(text, key))


def _morphism(args: argparse.Namespace, text: str) -> homotopy.HoMorphism:
    text = read_payload(text, args.stdin)
    data = load_payload(text)
    if data is not None:
        return homotopy.HoMorphism.from_dict(data, _key(args))
    return homotopy.parse_morphism(text, _key(args))


def _partition(text: str) -> partitions.Partition:
    data = load_payload(text)
    return partitions.partition(data if data is not None else parse_int_list(text))


def _series(args: argparse.Namespace, text: str) -> kzero.KSeries:
    data = load_payload(read_payload(text, args.stdin))
    if not isinstance(data, dict):
        raise ParseError("A series is given as a JSON object.")
    return kzero.KSeries.from_dict(data)


def _depth(args: argparse.Namespace) -> int:
    if args.N is not None:
        return args.N
    return int(config_section("SERIES").get("DEFAULT_DEPTH", 10))


# ----------------------------------------------------------------------
# weight


def _weight_info(args):
    w = weights.parse_weight(args.weight_text)
    bd = weights.deg_bidegree(w)
    sets = weights.label_sets(w)
    data = {
        "weight": w.to_dict(),
        "d": bd.d,
        "dprime": bd.dprime,
        "deg": bd.deg,
        "atypicality": weights.atypicality(w),
        "vee": sorted(sets.vee),
        "wedge": sorted(sets.wedge),
        "block_invariant": weights.block_invariant(w),
    }
    return Output(data, _fields({**data, "weight": str(w)}))


def _weight_twist(args):
    w = weights.ber_twist(weights.parse_weight(args.weight_text), args.k)
    return Output(w.to_dict(), str(w))


def _weight_radical_layers(args):
    rows = [
        {"i": i, "weight": str(w), "deg": weights.deg_bidegree(w).deg}
        for i, w in enumerate(weights.radical_layer_weights(args.n))
    ]
    return Output(rows, _table(rows))


# ----------------------------------------------------------------------
# block


def _block_key(args):
    w = weights.parse_weight(args.weight_text)
    key, index = gl1block.block_key(w)
    data = {"block": key.to_dict(), "m": key.m, "index": index}
    return Output(data, f"{key} index={index}")


def _block_neighbors(args):
    key = _key(args)
    nb = gl1block.neighbors(key, args.index)
    rows = [
        {"role": "socle", "index": nb["socle"][0], "weight": str(nb["socle"][1])},
        {"role": "self", "index": args.index, "weight": str(nb["weight"])},
        {"role": "top", "index": nb["top"][0], "weight": str(nb["top"][1])},
    ]
    return Output(rows, _table(rows))


def _block_deg(args):
    key = _key(args)
    rows = [
        {
            "index": i,
            "position": key.position(i),
            "weight": str(gl1block.weight_at(key, i)),
            "deg": gl1block.block_deg(key, i),
        }
        for i in parse_range(args.range)
    ]
    return Output(rows, _table(rows))


# ----------------------------------------------------------------------
# object


def _object_reduce(args):
    x = homotopy.ho_reduce(_block_object(args, args.object))
    return Output(x.to_dict(), str(x))


def _object_dual(args):
    x = intervalcat.twisted_dual(_block_object(args, args.object))
    return Output(x.to_dict(), str(x))


def _object_flags(args):
    rows = []
    for indec, _ in _block_object(args, args.object).summands:
        try:
            flag = intervalcat.kac_flag(indec)
        except NoFlag:
            flag = intervalcat.Flag()
        rows.append(
            {
                "summand": str(indec),
                "kac": None if flag.kac is None else [str(x) for x in flag.kac],
                "anti_kac": (
                    None
                    if flag.anti_kac is None
                    else [str(x) for x in flag.anti_kac]
                ),
            }
        )
    text = _table(
        [
            {
                k: ", ".join(v) if isinstance(v, list) else v or "-"
                for k, v in r.items()
            }
            for r in rows
        ]
    )
    return Output(rows, text)


def _object_classify(args):
    cls = intervalcat.classify_ideal(_block_object(args, args.object))
    rows = [
        {"summand": str(x), "T+": p, "T-": m, "projective": q}
        for x, p, m, q in cls.per_summand
    ]
    data = {
        "in_Tplus": cls.in_Tplus,
        "in_Tminus": cls.in_Tminus,
        "projective": cls.projective,
        "summands": rows,
    }
    text = _table(rows) + (
        f"\n\nT+: {cls.in_Tplus}  T-: {cls.in_Tminus}  projective: {cls.projective}"
    )
    return Output(data, text)


def _object_length(args):
    x = _block_object(args, args.object)
    factors = intervalcat.composition_factors(x)
    data = {
        "length": intervalcat.length(x),
        "factors": dict(sorted(factors.items())),
    }
    text = f"{data['length']}\n" + ", ".join(
        f"{simple(i)}^{k}" for i, k in sorted(factors.items())
    )
    return Output(data, text.rstrip())


def _object_series(args):
    s = kzero.object_series(_block_object(args, args.object))
    return Output(s.to_dict(), str(s))


# ----------------------------------------------------------------------
# hom


def _hom_dim(args):
    d = homotopy.hom_dim(_ho_object(args, args.x), _ho_object(args, args.y))
    return Output(d, str(d))


def _hom_table(args):
    key = _key(args)
    span = list(parse_range(args.range))
    matrix = {
        f"S({j})": [
            homotopy.hom_dim(
                homotopy.HoObject.of(homotopy.S(i), key=key),
                homotopy.HoObject.of(homotopy.S(j), key=key),
            )
            for i in span
        ]
        for j in span
    }
    frame = DataFrame(matrix, index=[f"S({i})" for i in span])
    data = {"range": [span[0], span[-1]], "rows": frame.values.tolist()}
    return Output(data, frame.to_string())


def _hom_basis(args):
    arrows = homotopy.basis(_ho_object(args, args.x), _ho_object(args, args.y))
    return Output([a.to_dict() for a in arrows], "\n".join(str(a) for a in arrows))


def _hom_split(args):
    ev, odd = homotopy.split_parity(_ho_object(args, args.x))
    data = {"ev": ev.to_dict(), "odd": odd.to_dict()}
    return Output(data, f"ev:  {ev}\nodd: {odd}")


def _hom_compose(args):
    h = homotopy.compose(_morphism(args, args.g), _morphism(args, args.f))
    return Output(h.to_dict(), str(h))


def _hom_image(args):
    x = _ho_object(args, args.x)
    if args.quotient == "isogeny":
        image = homotopy.isogeny_image(x)
        text = ", ".join(f"{k}: {v}" for k, v in sorted(image.items()))
        return Output(image, text or "0")
    image = homotopy.ss_image(x)
    rows = [
        {"weight": str(w), "mult": k}
        for w, k in sorted(image.items(), key=lambda kv: str(kv[0]))
    ]
    return Output(image, _table(rows))


def _hom_radical(args):
    x = _ho_object(args, args.x)
    data = {
        "hom_dim": homotopy.hom_dim(x, x),
        "module_end_dim": homotopy.module_end_dim(x),
        "radical_dim": homotopy.radical_dim(x),
    }
    return Output(data, _fields(data))


# ----------------------------------------------------------------------
# series


def _series_minimal_model(args):
    omega, kernel = kzero.minimal_model_series(_key(args), args.u, _depth(args))
    degrees = sorted(set(omega.degrees()) | set(kernel.degrees()), reverse=True)
    rows = [
        {
            "deg": d,
            "omega": " ".join(f"[{x}]" for x in omega.coefficient(d)),
            "kernel": " ".join(f"[{x}]" for x in kernel.coefficient(d)),
        }
        for d in degrees
    ]
    data = {"omega": omega.to_dict(), "kernel": kernel.to_dict()}
    return Output(data, _table(rows))


def _series_euler_check(args):
    result = kzero.euler_check(_key(args), args.u, _depth(args))
    data = {
        "main": result.main.to_dict(),
        "tail": result.tail.to_dict(),
        "bound": result.bound,
    }
    text = f"main: {result.main}\ntail: {result.tail}\nbound: {result.bound}"
    return Output(data, text)


def _series_filtration(args):
    flag = kzero.parse_flag(read_payload(args.flag, args.stdin))
    key = _key(args) if (args.weight or args.base is not None) else None
    groups = kzero.degree_filtration(flag, key)
    data = [{"deg": d, "labels": [str(x) for x in g]} for d, g in groups]
    rows = [{"deg": d, "labels": ", ".join(str(x) for x in g)} for d, g in groups]
    return Output(data, _table(rows))


def _series_kernel(args):
    s = kzero.kernel_simple_content(_key(args), args.u, _depth(args))
    return Output(s.to_dict(), str(s))


def _series_dual(args):
    s = kzero.dual_series(_series(args, args.series))
    return Output(s.to_dict(), str(s))


def _series_expand(args):
    s = kzero.expand_to_simples(_series(args, args.series))
    return Output(s.to_dict(), str(s))


def _series_growth(args):
    g = kzero.growth_class(_series(args, args.series))
    return Output(g, g)


# ----------------------------------------------------------------------
# partitions


def _partitions_box(args):
    rows = [
        {"partition": list(a), "size": sum(a)}
        for a in partitions.box_partitions(args.n)
    ]
    return Output(rows, "\n".join(str(r["partition"]) for r in rows))


def _partitions_selfconj(args):
    count = partitions.count_self_conjugate(args.n)
    data = {
        "n": args.n,
        "count": count,
        "closed_form": partitions.count_self_conjugate_closed_form(args.n),
    }
    return Output(data, str(count))


def _partitions_cauchy(args):
    pairs, total = partitions.cauchy_check(args.n)
    data = {"pairs": [[list(a), list(b)] for a, b in pairs], "total": total}
    return Output(data, str(total))


def _partitions_lr(args):
    lam, mu = _partition(args.lam), _partition(args.mu)
    if args.oracle is not None:
        product = partitions.lr_product_oracle(lam, mu, args.oracle)
    else:
        product = partitions.lr_product(lam, mu, max_rows=args.rows)
    rows = [{"nu": list(nu), "coeff": c} for nu, c in product.items()]
    return Output(rows, _table(rows))


def _partitions_vvstar(args):
    n = args.n
    rows = [
        {
            "partition": list(e.alpha),
            "transpose": list(partitions.transpose(e.alpha)),
            "self-conjugate": e.is_max_atypical,
            "dim": partitions.gl_dim(e.alpha, n),
            "degree": e.degree,
        }
        for e in partitions.vv_star_flag(n)
    ]
    return Output(rows, _table(rows))


def _partitions_dim(args):
    d = partitions.gl_dim(_partition(args.alpha), args.n)
    return Output(d, str(d))


def _partitions_estimate(args):
    bounds = partitions.weight_estimate(args.n)
    rows = [{"object": k, "low": b.low, "high": b.high} for k, b in bounds.items()]
    return Output(rows, _table(rows))


# ----------------------------------------------------------------------
# check


def _check(args):
    cfg = config_section("CHECKS")
    if args.seed is not None:
        cfg["SEED"] = args.seed
    names = None if not args.names or args.names == ["all"] else args.names
    results = run_checks(names, cfg)
    rows = [
        {
            "criterion": r.name,
            "status": "pass" if r.passed else "FAIL",
            "detail": r.detail,
        }
        for r in results
    ]
    status = EXIT_OK if all(r.passed for r in results) else EXIT_CHECK
    return Output([r._asdict() for r in results], _table(rows), status)


# ----------------------------------------------------------------------
# parser


class _Parser(argparse.ArgumentParser):
    """Parser that reads ``-2..1``, ``-1,0|0`` and ``-3`` as values.

    No option of this command line starts with a digit, so any argument
    of the form ``-<digit>...`` is a value.
    """

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-\.?\d")


def _add_block_args(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("block")
    group.add_argument("--weight", help="representative weight, e.g. '0,0|0'")
    group.add_argument("--core", help="comma-separated core labels")
    group.add_argument("--base", type=int, help="atypical position of L(0)")


def _action(
    sub, name: str, handler: Callable[[argparse.Namespace], Output], summary: str
) -> argparse.ArgumentParser:
    parser = sub.add_parser(name, help=summary, description=summary)
    parser.set_defaults(handler=handler)
    return parser


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per subcommand."""
    parser = _Parser(
        prog="gl-homotopy",
        description="Exact combinatorics of GL(m|n) homotopy categories.",
    )
    parser.add_argument("--json", action="store_true", help="print JSON")
    parser.add_argument("--config", help="iconfig.yml to use")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="more log output"
    )
    parser.add_argument("-q", "--quiet", action="store_true", help="errors only")
    commands = parser.add_subparsers(dest="command", required=True)

    # weight
    sub = commands.add_parser("weight", help="GL(m|n) weights").add_subparsers(
        dest="action", required=True
    )
    p = _action(sub, "info", _weight_info, "degree, label sets, atypicality")
    p.add_argument("weight_text", metavar="WEIGHT")
    p = _action(sub, "twist", _weight_twist, "tensor with Ber^k")
    p.add_argument("weight_text", metavar="WEIGHT")
    p.add_argument("-k", type=int, default=1)
    p = _action(
        sub, "radical-layers", _weight_radical_layers, "radical layer weights"
    )
    p.add_argument("-n", type=int, required=True)

    # block
    sub = commands.add_parser(
        "block", help="GL(m|1) block coordinates"
    ).add_subparsers(dest="action", required=True)
    p = _action(sub, "key", _block_key, "block of an atypical GL(m|1) weight")
    p.add_argument("weight_text", metavar="WEIGHT")
    p = _action(sub, "neighbors", _block_neighbors, "socle and top neighbours")
    _add_block_args(p)
    p.add_argument("--index", type=int, default=0)
    p = _action(sub, "deg", _block_deg, "degrees over an index range")
    _add_block_args(p)
    p.add_argument("--range", default="-5..5")

    # object
    sub = commands.add_parser("object", help="interval modules").add_subparsers(
        dest="action", required=True
    )
    for name, handler, summary in (
        ("reduce", _object_reduce, "image in the homotopy category"),
        ("dual", _object_dual, "twisted dual"),
        ("flags", _object_flags, "Kac and anti-Kac flags"),
        ("classify", _object_classify, "membership in T+, T- and projectives"),
        ("length", _object_length, "composition length and factors"),
        ("series", _object_series, "Kac-flag series of an object of T+"),
    ):
        p = _action(sub, name, handler, summary)
        p.add_argument(
            "object", metavar="OBJECT", help="e.g. 'R[0,3] + P(0)', or -"
        )
        _add_block_args(p)

    # hom
    sub = commands.add_parser(
        "hom", help="homotopy hom calculus"
    ).add_subparsers(dest="action", required=True)
    for name, handler, summary in (
        ("dim", _hom_dim, "dimension of [X, Y]"),
        ("basis", _hom_basis, "basis arrows of [X, Y]"),
    ):
        p = _action(sub, name, handler, summary)
        p.add_argument("x", metavar="X")
        p.add_argument("y", metavar="Y")
        _add_block_args(p)
    p = _action(sub, "table", _hom_table, "[S(i), S(j)] over a range")
    p.add_argument("--range", default="-10..10")
    _add_block_args(p)
    p = _action(sub, "split", _hom_split, "even and odd parts")
    p.add_argument("x", metavar="X")
    _add_block_args(p)
    p = _action(sub, "compose", _hom_compose, "composition G ∘ F")
    p.add_argument("g", metavar="G", help="e.g. 'f(0,2)'")
    p.add_argument("f", metavar="F")
    _add_block_args(p)
    p = _action(sub, "image", _hom_image, "image in a quotient category")
    p.add_argument("x", metavar="X")
    p.add_argument("--quotient", choices=["isogeny", "ss"], default="isogeny")
    _add_block_args(p)
    p = _action(sub, "radical", _hom_radical, "nilpotent part of [X, X]")
    p.add_argument("x", metavar="X")
    _add_block_args(p)

    # series
    sub = commands.add_parser(
        "series", help="Grothendieck ring series"
    ).add_subparsers(dest="action", required=True)
    for name, handler, summary in (
        (
            "minimal-model",
            _series_minimal_model,
            "series of Ω L(u) and its kernel",
        ),
        ("euler-check", _series_euler_check, "[Ω] - [kernel] in simple labels"),
        ("kernel", _series_kernel, "simple constituents of the kernel"),
    ):
        p = _action(sub, name, handler, summary)
        p.add_argument("--u", type=int, default=0)
        p.add_argument("-N", type=int, default=None)
        _add_block_args(p)
    p = _action(
        sub, "filtration", _series_filtration, "canonical degree filtration"
    )
    p.add_argument("flag", metavar="FLAG", help="e.g. 'V(1)@1, V(0)@0'")
    _add_block_args(p)
    for name, handler, summary in (
        ("dual", _series_dual, "twisted dual of a series"),
        ("expand", _series_expand, "expand Kac labels into simples"),
        ("growth", _series_growth, "finite / pol / fin bookkeeping"),
    ):
        p = _action(sub, name, handler, summary)
        p.add_argument("series", metavar="SERIES", help="JSON series or -")

    # partitions
    sub = commands.add_parser(
        "partitions", help="partition identities"
    ).add_subparsers(dest="action", required=True)
    for name, handler, summary in (
        ("box", _partitions_box, "partitions in the n x n box"),
        ("selfconj", _partitions_selfconj, "number of self-conjugate partitions"),
        ("cauchy", _partitions_cauchy, "Cauchy total, 2^(n^2)"),
        ("vvstar", _partitions_vvstar, "Kac flag of V ⊗ V*"),
        ("estimate", _partitions_estimate, "degree bounds for I ⊗ I*"),
    ):
        p = _action(sub, name, handler, summary)
        p.add_argument("-n", type=int, required=True)
    p = _action(sub, "lr", _partitions_lr, "Littlewood-Richardson product")
    p.add_argument("lam", metavar="LAMBDA", help="e.g. '2,1'")
    p.add_argument("mu", metavar="MU")
    p.add_argument("--rows", type=int, default=None, help="keep ν with <= rows")
    p.add_argument(
        "--oracle",
        type=int,
        default=None,
        metavar="K",
        help="use Schur polynomials in K variables",
    )
    p = _action(sub, "dim", _partitions_dim, "GL(n) dimension")
    p.add_argument("alpha", metavar="ALPHA")
    p.add_argument("-n", type=int, required=True)

    # check
    p = commands.add_parser("check", help="acceptance suite")
    p.add_argument(
        "names",
        nargs="*",
        metavar="NAME",
        help=f"all, or any of {', '.join(CRITERIA)}",
    )
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(handler=_check)
    return parser


def run(
    argv: list[str] | None = None, stdin: TextIO | None = None
) -> tuple[int, str]:
    """Execute one invocation; return ``(exit status, stdout text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    args.stdin = stdin

    if args.config:
        try:
            cfg = load_iconfig(args.config)
        except GLHomotopyError as exc:
            print(f"gl-homotopy: {exc}", file=sys.stderr)
            return EXIT_INPUT, ""
        setup_logging(cfg.get("LOGGING") or {}, force=True)
    if args.quiet:
        set_level("ERROR")
    elif args.verbose:
        set_level("DEBUG" if args.verbose > 1 else "INFO")

    logger.info("gl-homotopy %s %s", args.command, getattr(args, "action", ""))
    try:
        out = args.handler(args)
    except (GLHomotopyError, ValueError, LookupError, NotImplementedError) as exc:
        print(f"gl-homotopy: {exc}", file=sys.stderr)
        return EXIT_INPUT, ""
    return out.status, dumps(out.data) if args.json else out.text


def main(argv: list[str] | None = None) -> int:
    """Console entry point."""
    status, text = run(argv)
    if text:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
