"""Command-line front end: ``claims``, ``table``, ``verify`` and ``inspect``.

Exit codes: 0 when every report holds, 1 when some law has a
counterexample, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import pperm as pp
from .bilateral import check_axioms
from .claims import default_mode, run_claims
from .constructions import action_pair, construction, family_monoid
from .families import Family, enumerate_family, family, member
from .monoid_core import is_aperiodic, is_inverse, is_j_trivial
from .reports import DEFAULT_SAMPLES

SCHEMA_VERSION = 1
PROPS = {"inverse": is_inverse, "aperiodic": is_aperiodic, "j-trivial": is_j_trivial}


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """``"3"`` or ``"3..6"`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise argparse.ArgumentTypeError(f"bad chain-size range {text!r}")
    return list(range(lo, hi + 1))


def _dump(doc, fmt, out):
    if fmt == "json":
        text = json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    else:
        text = doc
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _text_reports(reports, header=""):
    lines = [header] if header else []
    for r in reports:
        status = "PASS" if r.holds else "FAIL"
        line = f"{status}  {r.law}  [{r.mode}, checked={r.checked}]"
        if r.counterexample is not None:
            line += "  counterexample: " + " | ".join(r.counterexample)
        if r.note:
            line += f"  ({r.note})"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _mode(args, n):
    return default_mode(n) if args.mode == "auto" else args.mode


def cmd_claims(args) -> int:
    sections, ok = [], True
    for n in args.n:
        reports = run_claims(n, mode=_mode(args, n), samples=args.samples, seed=args.seed,
                             mutate=args.mutate)
        holds = all(r.holds for r in reports)
        ok &= holds
        sections.append((n, holds, reports))
    if args.format == "json":
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": "claims",
            "holds": ok,
            "sections": [{"n": n, "holds": h, "reports": [r.to_dict() for r in reps]}
                         for n, h, reps in sections],
        }
    else:
        doc = "".join(_text_reports(reps, f"== n = {n}: {'all hold' if h else 'FAILURES'}")
                      for n, h, reps in sections)
    _dump(doc, args.format, args.out)
    return 0 if ok else 1


def cmd_table(args) -> int:
    fams = [family(t) for t in args.families]
    props = args.props
    for p in props:
        if p not in PROPS:
            raise UsageError(f"unknown property {p!r}; expected one of {', '.join(PROPS)}")
    columns = [f.value for f in fams] + [f"{f.value}.{p}" for f in fams for p in props]
    rows = []
    for n in args.n:
        row = {"n": n}
        for f in fams:
            row[f.value] = len(enumerate_family(f, n))
        for f in fams:
            for p in props:
                row[f"{f.value}.{p}"] = PROPS[p](family_monoid(f, n)).holds
        rows.append(row)
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": "table", "columns": ["n"] + columns, "rows": rows}
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["n"] + columns, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        doc = buf.getvalue()
    else:
        widths = [max(len(c), 6) for c in ["n"] + columns]
        lines = ["  ".join(c.rjust(w) for c, w in zip(["n"] + columns, widths))]
        for row in rows:
            lines.append("  ".join(str(row[c]).rjust(w) for c, w in zip(["n"] + columns, widths)))
        doc = "\n".join(lines) + "\n"
    _dump(doc, args.format, args.out)
    return 0


def cmd_verify(args) -> int:
    c = construction(args.construction)
    n = args.n
    mode = _mode(args, n)
    reports = check_axioms(action_pair(c, n), mode=mode, samples=args.samples, seed=args.seed)
    ok = all(r.holds for r in reports)
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": "verify", "construction": c.value,
               "n": n, "holds": ok, "reports": [r.to_dict() for r in reports]}
    else:
        doc = _text_reports(reports, f"== {c.value}, n = {n}")
    _dump(doc, args.format, args.out)
    return 0 if ok else 1


def cmd_inspect(args) -> int:
    try:
        s = pp.parse(args.element, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    info = {
        "element": pp.render(s),
        "n": s.n,
        "domain": list(pp.dom(s)),
        "image": list(pp.im(s)),
        "inverse": pp.render(pp.inverse(s)),
        "order-preserving": pp.is_order_preserving(s),
        "order-reversing": pp.is_order_reversing(s),
        "isometry": pp.is_isometry(s),
        "extensive": pp.is_extensive(s),
        "co-extensive": pp.is_coextensive(s),
        "partial-identity": pp.is_partial_identity(s),
        "families": [f.value for f in Family if member(f, s)],
    }
    if args.family:
        info["member"] = {args.family.value: member(args.family, s)}
    if args.format == "json":
        doc = {"schema_version": SCHEMA_VERSION, "command": "inspect", **info}
    else:
        doc = "".join(f"{k}: {v}\n" for k, v in info.items())
    _dump(doc, args.format, args.out)
    return 0


def _family_list(text):
    try:
        return [family(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _family_arg(text):
    try:
        return family(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _construction_arg(text):
    try:
        return construction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semigroup-forge",
                                description="Monoids of partial permutations and their semidirect decompositions.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, formats=("json", "text")):
        sp.add_argument("--format", choices=formats, default=formats[0])
        sp.add_argument("--out", help="write to this path instead of stdout")

    def sampling(sp):
        sp.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto",
                        help="auto: exhaustive for n <= 4, sampled for n >= 5")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)

    sp = sub.add_parser("claims", help="run every structural law for each n")
    sp.add_argument("--n", type=parse_range, default=[3])
    sp.add_argument("--mutate", action="store_true", help="self-test: corrupt one output of the POI right action")
    sampling(sp)
    common(sp)
    sp.set_defaults(func=cmd_claims)

    sp = sub.add_parser("table", help="family cardinalities (and properties) per n")
    sp.add_argument("--families", type=_family_list, default=[Family.POI])
    sp.add_argument("--n", type=parse_range, default=[3])
    sp.add_argument("--props", type=lambda t: [x for x in t.split(",") if x], default=[],
                    help="comma list of: " + ", ".join(PROPS))
    common(sp, ("text", "json", "csv"))
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("verify", help="axiom suite of one construction")
    sp.add_argument("--construction", type=_construction_arg, required=True)
    sp.add_argument("--n", type=int, default=3)
    sampling(sp)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("inspect", help="predicates of one partial permutation")
    sp.add_argument("element", help="two-row form, e.g. '[1 3 / 2 1]', or '∅'")
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--family", type=_family_arg)
    common(sp, ("text", "json"))
    sp.set_defaults(func=cmd_inspect)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", 1) < 1:
        parser.error("--samples must be positive")
    if isinstance(getattr(args, "n", None), int) and args.n < 1:
        parser.error("--n must be >= 1")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
