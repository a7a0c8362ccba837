"""Command-line interface.

Exit status is 0 on success, 1 on domain errors (reported as one JSON line on
stderr) and 2 on usage errors.  Output is canonical: the same request gives
the same bytes whatever ``--jobs`` is.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Optional, Sequence

from . import formats
from .ccmap import cc_block, cc_truncated, invert_known_part
from .components import ComponentLabel, component_leq, enumerate_components
from .errors import InvalidGenus, NilconeError
from .hasse import cover_relations, export_hasse
from .hn import UnimodularMatrix, as_class, as_hn, codim_one_stratum, enumerate_hn, sl2_transport, stratum_leq
from .jordan import hn_to_jordan, jordan_to_hn
from .matrix import invert_unitriangular
from .partitions import Partition, kostka_matrix

DEFAULT_MAX_CODIM = 3


def _arg(parse: Callable):
    def convert(text):
        try:
            return parse(text)
        except NilconeError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    convert.__name__ = parse.__name__.replace("parse_", "")
    return convert


def _jobs(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("--jobs must be at least 1")
    return n


def _use_color(fmt: str) -> bool:
    return fmt == "text" and "NO_COLOR" not in os.environ and sys.stdout.isatty()


def _heading(text: str, color: bool) -> str:
    return f"\x1b[1m{text}\x1b[0m" if color else text


def _text_matrix(labels: Sequence[str], rows, color: bool) -> str:
    cells = [["?" if x is None else str(x) for x in row] for row in rows]
    width = max([len(c) for row in cells for c in row] + [1])
    lines = [_heading("order: " + " ".join(labels), color)]
    lines += [" ".join(c.rjust(width) for c in row) for row in cells]
    return "\n".join(lines) + "\n"


def _require_elliptic(args):
    if args.genus != 1:
        raise InvalidGenus(f"'{args.command}' only supports genus 1; --genus is honored by codim1 alone")


def _formats(args, allowed: Sequence[str]):
    if args.format not in allowed:
        args.parser.error(f"--format {args.format} is not available for this command (use {', '.join(allowed)})")


# --- commands ----------------------------------------------------------------


def cmd_hn(args) -> str:
    _formats(args, ("json", "csv", "text"))
    strata = enumerate_hn(as_class(args.alpha), args.max_codim, jobs=args.jobs)
    records = [formats.hn_record(h) for h in strata]
    if args.format == "json":
        return formats.dumps(records) + "\n"
    if args.format == "csv":
        return formats.csv_table(["codim", "hn", "slopes"],
                                 [[r["codim"], formats.dumps(r["hn"]), " ".join(r["slopes"])] for r in records])
    return "".join(f"{r['codim']}  {formats.dumps(r['hn'])}  slopes {' > '.join(r['slopes'])}\n" for r in records)


def cmd_order(args) -> str:
    _formats(args, ("dot", "json", "text"))
    alpha = as_class(args.alpha)
    if args.components:
        items = enumerate_components(alpha, args.max_codim, jobs=args.jobs)
        labels = [formats.dumps(formats.component_json(c)) for c in items]
        leq = component_leq
    else:
        items = enumerate_hn(alpha, args.max_codim, jobs=args.jobs)
        labels = [formats.dumps(formats.hn_json(h)) for h in items]
        leq = stratum_leq
    if args.format == "dot":
        return export_hasse(labels, lambda i, j: leq(items[i], items[j]))
    covers = cover_relations(len(items), lambda i, j: i != j and leq(items[i], items[j]))
    if args.format == "json":
        return formats.dumps({"nodes": labels, "covers": [list(e) for e in covers]}) + "\n"
    return "".join(f"{labels[i]} < {labels[j]}\n" for i, j in covers) or "(no relations)\n"


def cmd_components(args) -> str:
    _formats(args, ("json", "csv", "text"))
    comps = enumerate_components(as_class(args.alpha), args.max_codim, jobs=args.jobs)
    values = [formats.component_json(c) for c in comps]
    if args.format == "json":
        return formats.dumps(values) + "\n"
    if args.format == "csv":
        return formats.csv_table(["hn", "lambda"], [[formats.dumps(v["hn"]), formats.dumps(v["lambda"])] for v in values])
    return "".join(formats.dumps(v) + "\n" for v in values)


def cmd_cc(args) -> str:
    _formats(args, ("json", "csv", "text"))
    color = _use_color(args.format)
    if args.what == "block":
        if args.hn is None:
            args.parser.error("cc block needs --hn")
        block = cc_block(as_hn(args.hn))
        matrix = invert_unitriangular(block.matrix) if args.inverse else block.matrix
        if args.format == "json":
            value = formats.matrix_json(matrix) if args.inverse else formats.block_json(block)
            return formats.dumps(value) + "\n"
        if args.format == "csv":
            return formats.matrix_csv(matrix)
        labels = [formats.dumps(formats.label_json(x)) for x in matrix.order]
        return _text_matrix(labels, matrix.to_lists(), color)

    if args.alpha is None:
        args.parser.error("cc matrix needs --alpha")
    m = cc_truncated(as_class(args.alpha), args.max_codim, jobs=args.jobs)
    if args.inverse:
        inv = invert_known_part(m, block_diagonal=args.block_diagonal)
        if args.format == "json":
            return formats.dumps(formats.matrix_json(inv)) + "\n"
        if args.format == "csv":
            return formats.matrix_csv(inv)
        labels = [formats.dumps(formats.component_json(c)) for c in inv.order]
        return _text_matrix(labels, inv.to_lists(), color)
    if args.format == "json":
        return formats.dumps(formats.truncated_json(m)) + "\n"
    if args.format == "csv":
        return formats.truncated_csv(m)
    labels = [formats.dumps(formats.component_json(c)) for c in m.order]
    return _text_matrix(labels, [[m.entry(i, j) for j in range(m.size)] for i in range(m.size)], color)


def cmd_kostka(args) -> str:
    _formats(args, ("json", "csv", "text"))
    m = kostka_matrix(args.degree)
    if args.inverse:
        m = invert_unitriangular(m)
    if args.format == "json":
        return formats.dumps(formats.matrix_json(m)) + "\n"
    if args.format == "csv":
        return formats.matrix_csv(m)
    labels = [formats.dumps(list(p)) for p in m.order]
    return _text_matrix(labels, m.to_lists(), _use_color(args.format))


def cmd_dict(args) -> str:
    _formats(args, ("json", "text"))
    if args.to_jordan:
        if args.hn is None or args.lam is None:
            args.parser.error("dict --to-jordan needs --hn and --lambda")
        c = ComponentLabel(as_hn(args.hn), tuple(Partition(p) for p in args.lam))
        return formats.dumps(formats.jordan_json(hn_to_jordan(c))) + "\n"
    if args.jordan is None or args.alpha is None:
        args.parser.error("dict --to-hn needs --jordan and --alpha")
    c = jordan_to_hn(args.jordan, as_class(args.alpha))
    return formats.dumps(formats.component_json(c)) + "\n"


def cmd_codim1(args) -> str:
    _formats(args, ("json", "text"))
    h = codim_one_stratum(as_class(args.alpha), genus=args.genus)
    if args.format == "text" and h is None:
        return "none\n"
    return formats.dumps(None if h is None else formats.hn_json(h)) + "\n"


def cmd_sl2(args) -> str:
    _formats(args, ("json", "text"))
    h = sl2_transport(UnimodularMatrix.from_lists(args.matrix), as_hn(args.hn))
    if args.format == "text" and h is None:
        return "none\n"
    return formats.dumps(None if h is None else formats.hn_json(h)) + "\n"


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv", "dot", "text"], default=None)
    common.add_argument("--genus", type=int, default=1, help="curve genus; only codim1 accepts values other than 1")
    common.add_argument("--jobs", type=_jobs, default=1, help="worker threads for enumeration")

    parser = argparse.ArgumentParser(prog="nilcone", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, default_format="json"):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func, default_format=default_format, parser=p)
        return p

    class_arg = _arg(formats.parse_class)
    pairs_arg = _arg(formats.parse_pairs)

    def bounded(p):
        p.add_argument("--alpha", type=class_arg, required=True, help="class as r,d")
        p.add_argument("--max-codim", type=int, default=DEFAULT_MAX_CODIM)

    bounded(add("hn", cmd_hn, "list HN types up to a codimension bound"))

    p = add("order", cmd_order, "Hasse diagram of the closure order", default_format="dot")
    bounded(p)
    p.add_argument("--components", action="store_true", help="order components instead of strata")

    bounded(add("components", cmd_components, "list irreducible component labels"))

    p = add("cc", cmd_cc, "characteristic-cycle blocks and truncated matrices")
    p.add_argument("what", choices=["block", "matrix"])
    p.add_argument("--hn", type=pairs_arg, help="HN type for 'block', e.g. [[0,2],[2,0]]")
    p.add_argument("--alpha", type=class_arg, help="class for 'matrix'")
    p.add_argument("--max-codim", type=int, default=DEFAULT_MAX_CODIM)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--block-diagonal", action="store_true",
                   help="with --inverse on 'matrix', invert only the determined diagonal blocks")

    p = add("kostka", cmd_kostka, "Kostka matrix of a degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--inverse", action="store_true")

    p = add("dict", cmd_dict, "HN labels <-> Jordan types in rank <= 3")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--to-jordan", action="store_true")
    mode.add_argument("--to-hn", action="store_true")
    p.add_argument("--hn", type=pairs_arg)
    p.add_argument("--lambda", dest="lam", type=_arg(formats.parse_partitions))
    p.add_argument("--jordan", type=pairs_arg)
    p.add_argument("--alpha", type=class_arg)

    p = add("codim1", cmd_codim1, "the codimension-one HN stratum, if any")
    p.add_argument("--alpha", type=class_arg, required=True)

    p = add("sl2", cmd_sl2, "transport an HN type by a unimodular matrix")
    p.add_argument("--matrix", type=_arg(formats.parse_matrix2), required=True)
    p.add_argument("--hn", type=pairs_arg, required=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    if getattr(args, "max_codim", 0) < 0:
        parser.error("--max-codim must be nonnegative")
    try:
        if args.command != "codim1":
            _require_elliptic(args)
        out = args.func(args)
    except NilconeError as exc:
        sys.stderr.write(formats.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
