"""Command-line front end: single values, tables, figure data, verification.

Exit codes: 0 success / all paths agree, 1 I/O error, 2 usage error,
3 verification mismatch.
"""

from __future__ import annotations

import argparse
import sys

from .numberfield import BetaKind, make_context
from .survivor import (
    BRUTE,
    CLOSED,
    CSV_HEADER,
    THEOREM,
    SurvivorRecord,
    brute_force_S,
    closed_record,
    cross_check,
    theorem_record,
)

TABLE_HEADER = "p,word,exact,float,method"

_METHOD_FLAGS = {"brute": BRUTE, "theorem": THEOREM, "closed": CLOSED}


def _record(method: str, kind: BetaKind, p: int, args) -> SurvivorRecord | None:
    if method == BRUTE:
        ctx = make_context(kind)
        return brute_force_S(
            ctx, p, workers=args.workers, allow_large=args.allow_large_p, digits=args.digits
        )
    if method == THEOREM:
        return theorem_record(kind, p, digits=args.digits)
    return closed_record(kind, p, digits=args.digits)


def _table_csv_line(rec: SurvivorRecord) -> str:
    word = rec.word or ""
    return f"{rec.p},{word},{rec.value.serialize()},{rec.value_float},{rec.method}"


def _emit(text: str, out_path: str | None) -> int:
    if out_path is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {out_path}: {exc}", file=sys.stderr)
        return 1
    return 0


def _svg(points: list[tuple[int, str]], title: str) -> str:
    """Self-contained scatter/line plot; axis ranges come from the data."""
    width, height = 640, 420
    ml, mr, mt, mb = 60, 20, 40, 50
    xs = [p for p, _ in points]
    ys = [float(v) for _, v in points]
    xmin, xmax = min(xs), max(xs)
    ymin, ymax = min(ys), max(ys)
    if xmax == xmin:
        xmax = xmin + 1
    if ymax == ymin:
        ymax = ymin + 1.0
    inner_w = width - ml - mr
    inner_h = height - mt - mb

    def px(x: float) -> str:
        return f"{ml + (x - xmin) / (xmax - xmin) * inner_w:.2f}"

    def py(y: float) -> str:
        return f"{mt + (ymax - y) / (ymax - ymin) * inner_h:.2f}"

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}"'
        f' viewBox="0 0 {width} {height}">',
        f'<rect width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width // 2}" y="20" text-anchor="middle" font-size="14">{title}</text>',
        f'<line x1="{ml}" y1="{mt}" x2="{ml}" y2="{height - mb}" stroke="black"/>',
        f'<line x1="{ml}" y1="{height - mb}" x2="{width - mr}" y2="{height - mb}" stroke="black"/>',
        f'<text x="{ml}" y="{height - mb + 18}" text-anchor="middle" font-size="11">{xmin}</text>',
        f'<text x="{width - mr}" y="{height - mb + 18}" text-anchor="middle" font-size="11">{xmax}</text>',
        f'<text x="{ml - 6}" y="{height - mb + 4}" text-anchor="end" font-size="11">{ymin:.5f}</text>',
        f'<text x="{ml - 6}" y="{mt + 4}" text-anchor="end" font-size="11">{ymax:.5f}</text>',
        f'<text x="{width // 2}" y="{height - 12}" text-anchor="middle" font-size="12">p</text>',
    ]
    path = " ".join(f"{px(p)},{py(float(v))}" for p, v in points)
    lines.append(f'<polyline points="{path}" fill="none" stroke="steelblue" stroke-width="1"/>')
    for p, v in points:
        lines.append(f'<circle cx="{px(p)}" cy="{py(float(v))}" r="3" fill="steelblue"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def cmd_survivor(args, parser) -> int:
    if args.p is None:
        parser.error("survivor requires --p")
    method = args.method or "all"
    methods = list(_METHOD_FLAGS.values()) if method == "all" else [_METHOD_FLAGS[method]]
    kind = BetaKind(args.beta)
    records = [r for m in methods if (r := _record(m, kind, args.p, args)) is not None]
    if args.format == "csv":
        body = "\n".join([TABLE_HEADER] + [_table_csv_line(r) for r in records]) + "\n"
    elif args.format == "text":
        body = "\n".join(r.describe(kind) for r in records) + "\n"
    else:
        parser.error("survivor supports --format text or csv")
    return _emit(body, args.out)


def cmd_table(args, parser) -> int:
    if args.pmax is None:
        parser.error("table requires --pmax")
    if args.method == "all":
        parser.error("table requires a single --method (brute, theorem or closed)")
    kind = BetaKind(args.beta)
    method = _METHOD_FLAGS[args.method or "theorem"]
    records = []
    for p in range(1, args.pmax + 1):
        rec = _record(method, kind, p, args)
        if rec is not None:
            records.append(rec)
    if args.format == "svg":
        points = [(r.p, r.value_float) for r in records]
        body = _svg(points, f"S(p) for beta={kind.value}, p=1..{args.pmax}")
    elif args.format == "csv":
        body = "\n".join([TABLE_HEADER] + [_table_csv_line(r) for r in records]) + "\n"
    else:
        body = "\n".join(r.describe(kind) for r in records) + "\n"
    return _emit(body, args.out)


def cmd_verify(args, parser) -> int:
    if args.pmax is None:
        parser.error("verify requires --pmax")
    reports = [
        cross_check(
            kind,
            args.pmax,
            workers=args.workers,
            allow_large=args.allow_large_p,
            digits=args.digits,
        )
        for kind in (BetaKind.BASE2, BetaKind.GOLDEN, BetaKind.TRIBONACCI)
    ]
    lines = [CSV_HEADER]
    for rep in reports:
        lines.extend(rep.csv_rows())
    mismatches: list[str] = []
    for rep in reports:
        mismatches.extend(rep.theorem_mismatches)
        mismatches.extend(rep.formula_mismatches)
    if mismatches:
        lines.append("mismatches:")
        lines.extend(mismatches)
    else:
        lines.append(f"ok: all paths agree for all kinds up to p={args.pmax}")
    status = _emit("\n".join(lines) + "\n", args.out)
    if status != 0:
        return status
    return 3 if mismatches else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="betahole",
        description="Critical hole sizes for periodic survivors of the beta-transformation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("survivor", "critical value for a single period"),
        ("table", "table of critical values for p = 1..pmax"),
        ("verify", "cross-check every computation path for all kinds"),
    ):
        sp = sub.add_parser(name, help=helptext)
        if name != "verify":
            sp.add_argument("--beta", choices=[k.value for k in BetaKind], required=True)
        sp.add_argument("--p", type=int, default=None, help="single period")
        sp.add_argument("--pmax", type=int, default=None, help="largest period")
        sp.add_argument(
            "--method",
            choices=["brute", "theorem", "closed", "all"],
            default=None,
            help="computation path (survivor defaults to all, table to theorem)",
        )
        sp.add_argument("--format", choices=["text", "csv", "svg"], default="text")
        sp.add_argument("--digits", type=int, default=10, help="significant digits")
        sp.add_argument("--workers", type=int, default=1, help="parallel workers")
        sp.add_argument("--out", default=None, help="output path (default stdout)")
        sp.add_argument(
            "--allow-large-p",
            action="store_true",
            help="allow brute-force enumeration for 20 < p <= 26",
        )
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.digits < 1:
        parser.error("--digits must be >= 1")
    if args.workers < 1:
        parser.error("--workers must be >= 1")
    for bound in (args.p, args.pmax):
        if bound is not None and bound < 1:
            parser.error("periods must be >= 1")
    handlers = {"survivor": cmd_survivor, "table": cmd_table, "verify": cmd_verify}
    try:
        return handlers[args.command](args, parser)
    except ValueError as exc:
        parser.error(str(exc))
        return 2  # unreachable; parser.error raises SystemExit(2)


if __name__ == "__main__":
    sys.exit(main())
