"""Command-line front end.

Exit status: 0 on success, 1 when a verification fails or lints fire, 2 on
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .datasets import NAMES, dataset_text, load_dataset
from .extcat import (
    CategoryError,
    FiniteExtCat,
    dump_category,
    load_category,
    right_perp,
    validate_lints,
)
from .quivers import Quiver, QuiverError, enumerate_succ, succ_interval_iso
from .torsion import (
    Report,
    TorsionError,
    enumerate_stors,
    heart_of,
    is_storsion,
    member_key,
    phi,
    psi,
    verify_all,
    verify_main_theorem,
)
from .typea import gen_typea, parse_orientation, pair_from_succ, verify_succ_bijection


class UsageError(Exception):
    pass


def _add_category_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group()
    src.add_argument("--spec", metavar="FILE", help="category spec file (JSON)")
    src.add_argument("--gen-typea", metavar="ORIENT", help='type-A orientation, e.g. "1>2<3<4" or "R L L"')
    src.add_argument("--dataset", metavar="NAME", help="bundled dataset name")
    p.add_argument("--mode", choices=["zero", "ext1"], default="ext1", help="negative extension for --gen-typea")


def _add_output(p: argparse.ArgumentParser, dot: bool = True, count: bool = False) -> None:
    p.add_argument("--json", action="store_true", help="emit JSON")
    if dot:
        p.add_argument("--dot", action="store_true", help="emit a DOT Hasse diagram")
    if count:
        p.add_argument("--count", action="store_true", help="print only the number of elements")


def _add_report_output(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit the JSON report (default)")
    fmt.add_argument("--text", action="store_true", help="one PASS/FAIL line per check instead of JSON")


def _add_selectors(p: argparse.ArgumentParser, *names: str) -> None:
    for name in names:
        p.add_argument(f"--{name}", metavar="MEMBERS", help="pair selector: torsion-class members")
    p.add_argument("--i1", metavar="VERTS", help="select t1 by a successor-closed set (type A)")
    p.add_argument("--i2", metavar="VERTS", help="select t2 by a successor-closed set (type A)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stors", description="s-torsion pairs of finite extriangulated categories")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("validate", help="load a category spec and check its structure")
    p.add_argument("file", nargs="?", help="category spec file")
    _add_category_source(p)

    p = sub.add_parser("lint", help="dimension lints for every stored conflation")
    p.add_argument("file", nargs="?", help="category spec file")
    _add_category_source(p)
    _add_output(p, dot=False)

    for name, help_ in (("stors", "enumerate s-torsion pairs"), ("hasse", "Hasse diagram of the s-torsion poset")):
        p = sub.add_parser(name, help=help_)
        _add_category_source(p)
        _add_output(p, count=name == "stors")
        p.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes")
        p.add_argument("--no-prune", action="store_true", help="test every subset as a torsion class")

    p = sub.add_parser("heart", help="heart of an interval [t1, t2]")
    _add_category_source(p)
    _add_selectors(p, "t1", "t2")
    _add_output(p)

    p = sub.add_parser("phi", help="image of t in the heart of [t1, t2]")
    _add_category_source(p)
    _add_selectors(p, "t1", "t2", "t")
    _add_output(p, dot=False)

    p = sub.add_parser("psi", help="pair of the ambient interval attached to a heart pair")
    _add_category_source(p)
    _add_selectors(p, "t1", "t2", "x")
    _add_output(p, dot=False)

    p = sub.add_parser("verify-theorem", help="check the interval/heart isomorphism exhaustively")
    _add_category_source(p)
    _add_selectors(p, "t1", "t2")
    p.add_argument("--all-intervals", action="store_true", help="check every interval of the poset")
    p.add_argument("--jobs", type=int, default=1, metavar="N")
    _add_report_output(p)

    p = sub.add_parser("verify-succ", help="check the s-torsion / successor-closed bijection (type A)")
    p.add_argument("orientation", nargs="?", help="type-A orientation")
    p.add_argument("--gen-typea", metavar="ORIENT")
    _add_report_output(p)

    p = sub.add_parser("gen-typea", help="print the spec file of a type-A category")
    p.add_argument("orientation")
    p.add_argument("--mode", choices=["zero", "ext1"], default="ext1")

    p = sub.add_parser("succ", help="successor-closed subsets of a quiver")
    _add_quiver_source(p)
    _add_output(p, count=True)

    p = sub.add_parser("succ-interval", help="succ[I1, I2] versus succ of the restricted quiver")
    _add_quiver_source(p)
    p.add_argument("--i1", required=True, metavar="VERTS")
    p.add_argument("--i2", required=True, metavar="VERTS")
    _add_output(p, dot=False)

    p = sub.add_parser("datasets", help="list bundled datasets or print one")
    p.add_argument("name", nargs="?")
    return parser


def _add_quiver_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--quiver", metavar="FILE", help='quiver file {"vertices": [...], "arrows": [[s, t], ...]}')
    src.add_argument("--gen-typea", metavar="ORIENT", help="type-A quiver from an orientation string")


# ---------------------------------------------------------------------------


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _category(args) -> FiniteExtCat:
    path = getattr(args, "file", None) or args.spec
    if path:
        return load_category(_read(path))
    if args.gen_typea:
        return gen_typea(parse_orientation(args.gen_typea), args.mode)
    if args.dataset:
        return load_dataset(args.dataset)
    raise UsageError("no category given: use --spec FILE, --gen-typea ORIENT or --dataset NAME")


def _quiver(args) -> Quiver:
    if args.quiver:
        return Quiver.from_json(_read(args.quiver))
    return parse_orientation(args.gen_typea).quiver()


def parse_members(text: str) -> list[str]:
    """A JSON array of names, or names separated by whitespace or ';'."""
    text = text.strip()
    if text.startswith("["):
        try:
            value = json.loads(text)
        except json.JSONDecodeError:
            value = None
        if isinstance(value, list) and all(isinstance(x, str) for x in value):
            return value
    return [x for x in text.replace(";", " ").split() if x]


def parse_vertices(text: str) -> list[str]:
    return [x for x in text.replace(",", " ").replace(";", " ").split() if x]


def _select(cat, poset, args, name):
    value = getattr(args, name, None)
    isucc = {"t1": "i1", "t2": "i2"}.get(name)
    if value is None and isucc and getattr(args, isucc, None) is not None:
        if not args.gen_typea:
            raise UsageError(f"--{isucc} needs --gen-typea")
        return pair_from_succ(parse_orientation(args.gen_typea), parse_vertices(getattr(args, isucc)))
    if value is None:
        raise UsageError(f"missing pair selector --{name}")
    T = cat.subcat(parse_members(value))
    try:
        return poset.find(T)
    except TorsionError as exc:
        raise UsageError(f"--{name}: {exc}") from exc


def _fmt(sub, cat=None) -> str:
    names = cat.sorted_members(sub) if cat is not None else member_key(sub)
    return "{" + ", ".join(names) + "}"


def _emit_report(rep: Report, args, out) -> int:
    if not args.text:
        out.write(rep.to_json())
    else:
        for c in rep.checks:
            out.write(f"{'PASS' if c['passed'] else 'FAIL'}  {c['name']}\n")
        for c in rep.counterexamples[:20]:
            out.write(f"  counterexample: {json.dumps(c, sort_keys=True)}\n")
        out.write(f"{'passed' if rep.passed else 'FAILED'}\n")
    return 0 if rep.passed else 1


def _cmd_validate(args, out) -> int:
    cat = _category(args)
    rows = sum(len(cat.conf[m]) - 2 for m in cat.indecs)
    out.write(f"ok: {cat.label or '(unlabelled)'}: {len(cat.indecs)} indecomposables, {rows} nontrivial conflations\n")
    return 0


def _cmd_lint(args, out) -> int:
    cat = _category(args)
    violations = validate_lints(cat)
    if args.json:
        out.write(
            json.dumps(
                {
                    "passed": not violations,
                    "violations": [
                        {
                            "family": v.family,
                            "middle": v.middle,
                            "row": [cat.sorted_members_list(v.row[0]), cat.sorted_members_list(v.row[1])],
                            "witness": v.witness,
                            "lhs": v.lhs,
                            "rhs": v.rhs,
                        }
                        for v in violations
                    ],
                },
                indent=2,
            )
            + "\n"
        )
    else:
        for v in violations:
            out.write(f"{v}\n")
        out.write(f"{len(violations)} violation(s)\n")
    return 1 if violations else 0


def _cmd_stors(args, out) -> int:
    cat = _category(args)
    poset = enumerate_stors(cat, prune=not args.no_prune, jobs=args.jobs)
    if getattr(args, "count", False):
        out.write(f"{len(poset)}\n")
    elif args.dot:
        out.write(poset.to_dot(cat.label or "stors"))
    elif args.json:
        out.write(json.dumps(poset.to_dict(), indent=2) + "\n")
    elif args.command == "hasse":
        for lo, hi in poset.hasse_edges:
            out.write(f"{_fmt(poset.pairs[hi].T, cat)} -> {_fmt(poset.pairs[lo].T, cat)}\n")
    else:
        for p in poset:
            out.write(f"T = {_fmt(p.T, cat)}  F = {_fmt(p.F, cat)}\n")
    return 0


def _cmd_heart(args, out) -> int:
    cat = _category(args)
    poset = enumerate_stors(cat)
    t1, t2 = _select(cat, poset, args, "t1"), _select(cat, poset, args, "t2")
    iv = heart_of(cat, t1, t2)
    local = enumerate_stors(iv.category)
    if args.dot:
        out.write(local.to_dot("heart"))
    elif args.json:
        out.write(json.dumps({"heart": cat.sorted_members(iv.heart), "stors": local.to_dict()}, indent=2) + "\n")
    else:
        out.write(f"heart = {_fmt(iv.heart, cat)}\n")
        out.write(f"{len(local)} s-torsion pair(s) in the heart\n")
    return 0


def _cmd_phi(args, out) -> int:
    cat = _category(args)
    poset = enumerate_stors(cat)
    t1, t2, t = (_select(cat, poset, args, k) for k in ("t1", "t2", "t"))
    x = phi(cat, t1, t2, t)
    if args.json:
        out.write(json.dumps(x.to_dict(), indent=2) + "\n")
    else:
        out.write(f"X = {_fmt(x.T, cat)}  Y = {_fmt(x.F, cat)}\n")
    return 0 if x.valid else 1


def _cmd_psi(args, out) -> int:
    cat = _category(args)
    poset = enumerate_stors(cat)
    t1, t2 = _select(cat, poset, args, "t1"), _select(cat, poset, args, "t2")
    if args.x is None:
        raise UsageError("missing pair selector --x")
    iv = heart_of(cat, t1, t2)
    X = iv.category.subcat(parse_members(args.x))
    x = is_storsion(iv.category, X, right_perp(iv.category, X))
    t = psi(cat, t1, t2, x, iv)
    if args.json:
        out.write(json.dumps(t.to_dict(), indent=2) + "\n")
    else:
        out.write(f"T = {_fmt(t.T, cat)}  F = {_fmt(t.F, cat)}\n")
    return 0 if t.valid else 1


def _cmd_verify_theorem(args, out) -> int:
    cat = _category(args)
    poset = enumerate_stors(cat, jobs=args.jobs)
    if args.all_intervals:
        rep = verify_all(cat, poset)
    else:
        rep = verify_main_theorem(cat, _select(cat, poset, args, "t1"), _select(cat, poset, args, "t2"), poset)
    return _emit_report(rep, args, out)


def _cmd_verify_succ(args, out) -> int:
    text = args.orientation or args.gen_typea
    if text is None:
        raise UsageError("give an orientation")
    return _emit_report(verify_succ_bijection(parse_orientation(text)), args, out)


def _cmd_gen_typea(args, out) -> int:
    out.write(dump_category(gen_typea(parse_orientation(args.orientation), args.mode)))
    return 0


def _cmd_succ(args, out) -> int:
    Q = _quiver(args)
    lattice = enumerate_succ(Q)
    if args.count:
        out.write(f"{len(lattice)}\n")
    elif args.dot:
        out.write(lattice.to_dot())
    elif args.json:
        out.write(json.dumps(lattice.to_dict(), indent=2) + "\n")
    else:
        for s in lattice.sets:
            out.write("{" + ", ".join(Q.ordered(s)) + "}\n")
    return 0


def _cmd_succ_interval(args, out) -> int:
    Q = _quiver(args)
    iso = succ_interval_iso(Q, parse_vertices(args.i1), parse_vertices(args.i2))
    if args.json:
        out.write(json.dumps(iso.to_dict(), indent=2) + "\n")
    else:
        fmt = lambda s: "{" + ", ".join(Q.ordered(s)) + "}"  # noqa: E731
        for I, J in iso.phi.items():
            out.write(f"{fmt(I)} -> {fmt(J)}\n")
        out.write("verified\n" if iso.verified else "NOT verified\n")
    return 0 if iso.verified else 1


def _cmd_datasets(args, out) -> int:
    if args.name is None:
        for name in NAMES:
            out.write(name + "\n")
    else:
        out.write(dataset_text(args.name))
    return 0


COMMANDS = {
    "validate": _cmd_validate,
    "lint": _cmd_lint,
    "stors": _cmd_stors,
    "hasse": _cmd_stors,
    "heart": _cmd_heart,
    "phi": _cmd_phi,
    "psi": _cmd_psi,
    "verify-theorem": _cmd_verify_theorem,
    "verify-succ": _cmd_verify_succ,
    "gen-typea": _cmd_gen_typea,
    "succ": _cmd_succ,
    "succ-interval": _cmd_succ_interval,
    "datasets": _cmd_datasets,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, CategoryError, QuiverError, TorsionError, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        err.write(f"stors {args.command}: error: {msg}\n")
        return 2


def main() -> None:
    sys.exit(run())
