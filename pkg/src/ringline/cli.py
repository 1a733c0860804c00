"""Command-line front end: ``ringline <verb> <ring> [options]``.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import report, verify
from .ring_core import FiniteRing, RingError, builtin_ring, ring_from_spec


def load_ring(spec: str) -> FiniteRing:
    """Built-in name (``R_triangle``, ``GF2``, ``GF2xGF2``, ...) or ``file:<path>``."""
    if spec.startswith("file:"):
        path = Path(spec[5:])
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise RingError(f"cannot read {path}: {exc.strerror}") from None
        return ring_from_spec(text, label=path.stem)
    return builtin_ring(spec)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ringline", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    for verb, help_ in (("ring", "element classes and operation tables"),
                        ("ideals", "ideals, radical and quotients"),
                        ("line", "projective line census")):
        s = sub.add_parser(verb, help=help_)
        s.add_argument("ring")

    s = sub.add_parser("tables", help="neighbour/distant tables over GF(2)^3")
    s.add_argument("ring")
    s.add_argument("--which", choices=list(report.TABLE_GROUPS), default="inner")

    s = sub.add_parser("verify", help="run verification suites")
    s.add_argument("ring")
    s.add_argument("--suite", choices=list(verify.SUITES) + ["all"], default="all")

    s = sub.add_parser("export", help="graph export of the line")
    s.add_argument("ring")
    s.add_argument("--format", dest="fmt", default="dot")
    s.add_argument("--target", choices=report.EXPORT_TARGETS, default="distant-graph")
    s.add_argument("--shell", choices=("inner", "outer"), default="inner")
    s.add_argument("--with-nucleus", action="store_true")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        ring = load_ring(args.ring)
        if args.verb == "ring":
            sys.stdout.write(report.ring_report(ring))
        elif args.verb == "ideals":
            sys.stdout.write(report.ideals_report(ring))
        elif args.verb == "line":
            sys.stdout.write(report.line_report(ring))
        elif args.verb == "tables":
            sys.stdout.write(report.tables_report(ring, args.which))
        elif args.verb == "export":
            sys.stdout.write(report.export(ring, args.fmt, args.target, args.shell, args.with_nucleus))
        elif args.verb == "verify":
            outcomes = verify.run(ring, args.suite)
            for o in outcomes:
                print(o.line())
            failed = [o for o in outcomes if o.status == "fail"]
            counts = {s: sum(o.status == s for o in outcomes) for s in ("pass", "fail", "skip")}
            print(f"summary: pass={counts['pass']} fail={counts['fail']} skip={counts['skip']}")
            return 1 if failed else 0
    except RingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
