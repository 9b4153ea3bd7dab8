"""Command-line front end with stable single-line outputs.

Numbers are accepted in decimal, 0x hex, or 0b binary.  Text output is a
pure function of argv; ``--json`` emits the same fields as one JSON object.
Exit codes: 0 success, 1 failed verification or write error, 2 usage error,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .advisor import advise_move, winning_moves
from .census import census, closed_form_counts
from .limits import CapExceeded
from .mex import greedy_minimal_table, mex_oracle, table_to_text, verify_table_equals_xor
from .natural import nim_sum, parse_natural
from .render import render_pgm
from .triangles import classify_triangle, reorder_dominant

__all__ = ["build_parser", "main"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nimtriples",
        description="Nim addition, triangle classification, mex oracles, and greedy tables.",
    )
    parser.add_argument("--json", action="store_true", help="emit one JSON object instead of text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sum", help="Nim sum of two naturals")
    p.add_argument("a", type=parse_natural)
    p.add_argument("b", type=parse_natural)

    p = sub.add_parser("classify", help="class, statuses, and discriminant of a triangle")
    p.add_argument("a", type=parse_natural)
    p.add_argument("b", type=parse_natural)
    p.add_argument("c", type=parse_natural)

    p = sub.add_parser("reorder", help="permute a triple so the first entry dominates")
    p.add_argument("a", type=parse_natural)
    p.add_argument("b", type=parse_natural)
    p.add_argument("c", type=parse_natural)

    p = sub.add_parser("mex", help="Nim sum recomputed via the exclusion-set mex oracle")
    p.add_argument("a", type=parse_natural)
    p.add_argument("b", type=parse_natural)

    p = sub.add_parser("table", help="greedy minimal operation table")
    p.add_argument("n", type=parse_natural)
    p.add_argument(
        "--verify", action="store_true", help="check the table against XOR instead of printing it"
    )

    p = sub.add_parser("move", help="winning-move advice for a Nim position")
    p.add_argument("piles", type=parse_natural, nargs="+")
    p.add_argument("--all", action="store_true", help="list every winning move (3 piles only)")

    p = sub.add_parser("census", help="exhaustive class tallies over [0, 2**k)^3")
    p.add_argument("k", type=parse_natural)
    p.add_argument(
        "--check-closed-form", action="store_true", help="compare tallies with the closed forms"
    )
    p.add_argument("--timing", action="store_true", help="append elapsed milliseconds")

    p = sub.add_parser("render", help="write the classification bitmap as binary PGM")
    p.add_argument("k", type=parse_natural)
    p.add_argument("c", type=parse_natural)
    p.add_argument("--out", required=True, help="output file path")

    return parser


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    print(json.dumps(payload) if args.json else text)


def _run_sum(args: argparse.Namespace) -> int:
    value = nim_sum(args.a, args.b)
    _emit(args, str(value), {"value": value})
    return 0


def _run_classify(args: argparse.Namespace) -> int:
    result = classify_triangle(args.a, args.b, args.c)
    parts = [result.kind.value]
    payload: dict = {"class": result.kind.value}
    if result.discriminant is not None:
        parts.append(f"j={result.discriminant}")
        payload["j"] = result.discriminant
    for name, status in zip("abc", result.statuses):
        parts.append(f"{name}:{status.value}")
        payload[name] = status.value
    _emit(args, " ".join(parts), payload)
    return 0


def _run_reorder(args: argparse.Namespace) -> int:
    triple, perm = reorder_dominant(args.a, args.b, args.c)
    text = f"{triple[0]} {triple[1]} {triple[2]} perm={perm[0]},{perm[1]},{perm[2]}"
    _emit(args, text, {"triple": list(triple), "perm": list(perm)})
    return 0


def _run_mex(args: argparse.Namespace) -> int:
    value = mex_oracle(args.a, args.b)
    _emit(args, str(value), {"value": value})
    return 0


def _run_table(args: argparse.Namespace) -> int:
    rows = greedy_minimal_table(args.n)
    if args.verify:
        ok, mismatch = verify_table_equals_xor(rows)
        if ok:
            _emit(args, f"n={args.n} xor=ok", {"n": args.n, "xor": "ok"})
            return 0
        a, b = mismatch
        _emit(
            args,
            f"n={args.n} xor=mismatch at={a},{b}",
            {"n": args.n, "xor": "mismatch", "at": [a, b]},
        )
        return 1
    _emit(args, table_to_text(rows), {"n": args.n, "rows": rows})
    return 0


def _run_move(args: argparse.Namespace) -> int:
    if args.all:
        moves = winning_moves(args.piles)
        if args.json:
            print(json.dumps({"moves": [{"pile": m.pile, "new": m.new_size} for m in moves]}))
        elif moves:
            for m in moves:
                print(f"winning pile={m.pile} new={m.new_size}")
        else:
            print("no-winning-move")
        return 0
    advice = advise_move(args.piles)
    if advice is None:
        _emit(args, "no-winning-move", {"winning": False})
    else:
        _emit(
            args,
            f"winning pile={advice.pile} new={advice.new_size}",
            {"winning": True, "pile": advice.pile, "new": advice.new_size},
        )
    return 0


def _run_census(args: argparse.Namespace) -> int:
    report = census(args.k)
    text = report.to_line(timing=args.timing)
    payload = report.as_dict(timing=args.timing)
    code = 0
    if args.check_closed_form:
        verdict = "ok" if report.counts == closed_form_counts(args.k) else "mismatch"
        text += f" closed-form={verdict}"
        payload["closed_form"] = verdict
        if verdict != "ok":
            code = 1
    _emit(args, text, payload)
    return code


def _run_render(args: argparse.Namespace) -> int:
    data = render_pgm(args.k, args.c)
    try:
        with open(args.out, "wb") as handle:
            handle.write(data)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return 1
    n = 1 << args.k
    _emit(args, f"out={args.out} width={n} height={n}", {"out": args.out, "width": n, "height": n})
    return 0


_COMMANDS = {
    "sum": _run_sum,
    "classify": _run_classify,
    "reorder": _run_reorder,
    "mex": _run_mex,
    "table": _run_table,
    "move": _run_move,
    "census": _run_census,
    "render": _run_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
