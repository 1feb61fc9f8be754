"""Command-line front end.

Exit codes: 0 ok, 1 mismatch, 2 invalid input (one reason line on stderr).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import identities as ids
from .errors import BadParams, ParseError, VactabError
from .growth import (
    Filling,
    backward_growth,
    forward_growth,
    format_boundary,
    greene_shapes,
    parse_boundary,
    read_boundary,
    render_ascii,
)
from .partitions import Partition, format_compact, parse_partition
from .setpartitions import enumerate_set_partitions, format_set_partition, parse_set_partition
from .tableaux import (
    enumerate_syt,
    enumerate_vactab,
    parse_syt,
    parse_vactab,
    syt_to_tableau,
)

OK, MISMATCH, INVALID = "ok", "mismatch", "invalid-input"
EXIT = {OK: 0, MISMATCH: 1, INVALID: 2}

LISTINGS = {
    "A": (Partition((3,)), Partition((3,)), 5),
    "B": (Partition((3,)), Partition((1, 1, 1)), 5),
    "C": (Partition((2, 1)), Partition((2, 1)), 3),
}


@dataclass
class Report:
    status: str
    lines: list[str] = field(default_factory=list)
    lhs: int | None = None
    rhs: int | None = None

    @property
    def exit_code(self) -> int:
        return EXIT[self.status]


def load_listing(which: str) -> list[str]:
    text = resources.files("vactab").joinpath(f"data/listing_{which.lower()}.txt").read_text()
    return [line.strip() for line in text.splitlines() if line.strip()]


def reproduce_listing(which: str) -> Report:
    which = which.upper()
    lam, mu, k = LISTINGS[which]
    listing = enumerate_vactab(lam, mu, k)
    fixture = {parse_vactab(line) for line in load_listing(which)}
    lines = [str(v) for v in listing] + [f"count: {len(listing)}"]
    status = OK if set(listing) == fixture else MISMATCH
    return Report(status, lines, lhs=len(fixture), rhs=len(listing))


def growth_roundtrip(filling: Filling, expected_boundary: str | None = None) -> Report:
    """Forward growth, Greene check at every corner, backward reconstruction."""
    diagram = forward_growth(filling)
    for corner, label in sorted(diagram.labels.items()):
        ne, se = greene_shapes(filling, *corner)
        if ne != label or se != label:
            return Report(MISMATCH, [f"corner {corner}: growth {format_compact(label)}, "
                                     f"chains {format_compact(ne)}/{format_compact(se)}"])
    word = read_boundary(diagram)
    if expected_boundary is not None:
        given = parse_boundary(expected_boundary)
        if given != word:
            return Report(MISMATCH, [f"boundary {format_boundary(word)} differs from {expected_boundary}"])
    if backward_growth(filling.arrangement, word) != filling:
        return Report(MISMATCH, ["backward growth did not return the filling"])
    return Report(OK, [format_boundary(word), "ok"])


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        self.exit(2, f"error: {message}\n")


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _partition(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


MAPPABLE = ("sequences", "bounded", "shaped", "column", "hook")


def _identity(text: str) -> str:
    try:
        return ids.resolve_identity(text)
    except BadParams as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vactab", description="Growth diagrams and vacillating-tableau bijections.")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int)
        p.add_argument("--k", type=int)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("enum", help="list vacillating tableaux, standard tableaux or set partitions")
    common(p)
    p.add_argument("--what", choices=("vactab", "syt", "setpart"), default="vactab")
    p.add_argument("--from", dest="start", type=_partition)
    p.add_argument("--to", dest="end", type=_partition)
    p.add_argument("--blocks", type=int, help="number of blocks (setpart)")

    p = sub.add_parser("verify", help="check an identity by counting both sides")
    common(p)
    p.add_argument("--id", required=True, type=_identity, metavar="|".join(ids.IDENTITIES))
    p.add_argument("--mu", type=_partition)

    for verb in ("map", "unmap"):
        p = sub.add_parser(verb, help=f"{'apply' if verb == 'map' else 'invert'} an identity bijection")
        common(p)
        p.add_argument("--id", required=True, type=_identity, metavar="|".join(MAPPABLE))
        p.add_argument("--mu", type=_partition)
        if verb == "map":
            p.add_argument("--seq", type=_ints)
            p.add_argument("--partition", help='set partition, e.g. "1 2 3 | 4 6 | 5"')
            p.add_argument("--case", type=int, choices=(1, 2, 3))
            p.add_argument("--a", type=int, default=1)
            p.add_argument("--b", type=int, default=1)
        else:
            p.add_argument("--tableau", required=True, help='vacillating tableau, e.g. "321>32<42"')
            p.add_argument("--syt", help='standard tableau rows, e.g. "1 2 3/4 5/6"')

    p = sub.add_parser("growth", help="growth-diagram round trip for a filling JSON file")
    p.add_argument("file")
    p.add_argument("--render", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("listing", aliases=["appendix"], help="reproduce a reference listing of tableaux")
    p.add_argument("which", choices=("A", "B", "C", "a", "b", "c"))
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _need(args: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise VactabError(f"missing {', '.join(missing)}")


def _rows(rows: list[list[int]]) -> list[list[int]]:
    return [list(r) for r in rows]


def _run_enum(args) -> Report:
    if args.what == "vactab":
        _need(args, "start", "end", "k")
        items = enumerate_vactab(args.start, args.end, args.k)
        payload = [[list(p) for p in v.seq] for v in items]
        lines = [str(v) for v in items]
    elif args.what == "syt":
        _need(args, "start")
        items = enumerate_syt(args.start)
        payload = [syt_to_tableau(s) for s in items]
        lines = [str(s) for s in items]
    else:
        _need(args, "k")
        items = enumerate_set_partitions(args.k, args.blocks)
        payload = [[list(b) for b in pi.blocks] for pi in items]
        lines = [format_set_partition(pi) for pi in items]
    if args.format == "json":
        return Report(OK, [json.dumps({"count": len(items), "items": payload})])
    return Report(OK, lines + [f"count: {len(items)}"])


def _run_verify(args) -> Report:
    _need(args, "n", "k")
    rep = ids.verify_identity(args.id, args.n, args.k, args.mu)
    status = OK if rep.ok else MISMATCH
    if args.format == "json":
        data = {"id": rep.identity, "n": rep.n, "k": rep.k, "lhs": rep.lhs, "rhs": rep.rhs, "ok": rep.ok}
        if rep.middle is not None:
            data["middle"] = rep.middle
        return Report(status, [json.dumps(data)], rep.lhs, rep.rhs)
    return Report(status, [str(rep)], rep.lhs, rep.rhs)


def _run_map(args) -> Report:
    _need(args, "n", "k")
    n, k = args.n, args.k
    if args.id in ("sequences", "shaped"):
        _need(args, "seq")
        mu = args.mu if args.id == "shaped" and args.mu is not None else Partition((n,))
        syt, v = ids.seq_to_pair_shaped(n, k, mu, args.seq)
        if args.format == "json":
            return Report(OK, [json.dumps({"syt": syt_to_tableau(syt), "tableau": [list(p) for p in v.seq]})])
        return Report(OK, [str(syt), str(v)])
    _need(args, "partition")
    pi = parse_set_partition(args.partition, k)
    if args.id == "bounded":
        v = ids.sp_to_vactab_bounded(n, k, pi)
    elif args.id == "column":
        v = ids.sp_to_vactab_column(n, k, pi)
    else:
        _need(args, "case")
        v = ids.code_to_vactab_hook(n, k, ids.HookCode(args.case, pi, args.a, args.b))
    if args.format == "json":
        return Report(OK, [json.dumps({"tableau": [list(p) for p in v.seq]})])
    return Report(OK, [str(v)])


def _run_unmap(args) -> Report:
    _need(args, "n", "k")
    n, k = args.n, args.k
    v = parse_vactab(args.tableau)
    if args.id in ("sequences", "shaped"):
        _need(args, "syt")
        mu = args.mu if args.id == "shaped" and args.mu is not None else Partition((n,))
        seq = ids.pair_to_seq_shaped(n, k, mu, (parse_syt(args.syt), v))
        return Report(OK, [json.dumps({"seq": list(seq)}) if args.format == "json" else ",".join(map(str, seq))])
    if args.id == "hook":
        code = ids.vactab_to_code_hook(n, k, v)
        if args.format == "json":
            return Report(OK, [json.dumps({"case": code.case, "partition": [list(b) for b in code.partition.blocks],
                                           "a": code.a, "b": code.b})])
        return Report(OK, [f"case {code.case}: {format_set_partition(code.partition)} (a={code.a}, b={code.b})"])
    pi = ids.vactab_to_sp_bounded(n, k, v) if args.id == "bounded" else ids.vactab_to_sp_column(n, k, v)
    if args.format == "json":
        return Report(OK, [json.dumps([list(b) for b in pi.blocks])])
    return Report(OK, [format_set_partition(pi)])


def _run_growth(args) -> Report:
    try:
        text = Path(args.file).read_text()
        data = json.loads(text)
    except (OSError, ValueError) as exc:
        raise ParseError(f"cannot read filling JSON: {exc}") from None
    filling = Filling.from_json(text)
    boundary = data.get("boundary") if isinstance(data, dict) else None
    rep = growth_roundtrip(filling, boundary)
    if args.render:
        rep.lines = render_ascii(forward_growth(filling)).splitlines() + rep.lines
    if args.format == "json":
        rep.lines = [json.dumps({"status": rep.status, "detail": rep.lines})]
    return rep


def _run_listing(args) -> Report:
    rep = reproduce_listing(args.which)
    if args.format == "json":
        rep.lines = [json.dumps({"status": rep.status, "count": rep.rhs, "tableaux": rep.lines[:-1]})]
    return rep


def run(argv: Sequence[str] | None = None) -> Report:
    args = build_parser().parse_args(argv)
    handler = {"enum": _run_enum, "verify": _run_verify, "map": _run_map, "unmap": _run_unmap,
               "growth": _run_growth, "listing": _run_listing, "appendix": _run_listing}[args.verb]
    try:
        return handler(args)
    except VactabError as exc:
        return Report(INVALID, [str(exc)])


def main(argv: Sequence[str] | None = None) -> int:
    rep = run(argv)
    if rep.status == INVALID:
        print(f"error: {rep.lines[0]}", file=sys.stderr)
    else:
        for line in rep.lines:
            print(line)
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
