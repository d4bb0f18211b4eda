"""Command-line interface: ``kl``, ``hom``, ``verify`` and ``list``.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bimod import BimodError, hom_basis, parse_object
from .catalog import ENTRIES, CatalogError, verify
from .coxeter import INF, CoxeterError, CoxeterGroup, CoxeterMatrix, dihedral, type_A
from .fields import FieldError, parse_field
from .hecke import kl_element, t_element
from .realization import RealizationError, builtin, load_realization

GROUPS = {
    "S2": lambda: CoxeterMatrix(((1,),)),
    "S3": lambda: type_A(2),
    "S4": lambda: type_A(3),
    "B2": lambda: dihedral(4),
    "G2": lambda: dihedral(6),
    "A1~": lambda: dihedral(None),
    "A2~": lambda: CoxeterMatrix(((1, 3, 3), (3, 1, 3), (3, 3, 1))),
}
DEFAULT_INFINITE_MAXLEN = 4
_FINITE_PROBE = 40


class InputError(Exception):
    pass


def _group(args) -> CoxeterGroup:
    if args.realization:
        return _realization(args).group
    name = args.builtin or "S3"
    if name in GROUPS:
        return CoxeterGroup(GROUPS[name]())
    try:
        return builtin(name).group
    except RealizationError:
        raise InputError(f"unknown group {name!r}; choose from {', '.join(GROUPS)}") from None


def _realization(args):
    field = parse_field(args.field) if getattr(args, "field", None) else None
    if getattr(args, "realization", None):
        try:
            return load_realization(args.realization, field)
        except OSError as exc:
            raise InputError(str(exc)) from None
    return builtin(args.builtin or "SL2", field or "Q")


def _max_length(group: CoxeterGroup, maxlen: int | None) -> int:
    if maxlen is not None:
        if maxlen < 0:
            raise InputError("--maxlen must be non-negative")
        return maxlen
    if all(group.matrix.m[i][j] != INF for i in range(group.rank) for j in range(group.rank)):
        size = 1
        for L in range(1, _FINITE_PROBE):
            n = len(group.enumerate_upto(L))
            if n == size:
                return L - 1
            size = n
    return DEFAULT_INFINITE_MAXLEN


def cmd_kl(args) -> int:
    group = _group(args)
    L = _max_length(group, args.maxlen)
    rows = [(w, kl_element(w), t_element(w)) for w in group.enumerate_upto(L)]
    if args.json:
        print(json.dumps([{"w": str(w), "b": b.to_json(), "t": t.to_json()} for w, b, t in rows], indent=2))
        return 0
    width = max(len(str(w)) for w, _, _ in rows)
    for w, b, t in rows:
        print(f"{str(w):<{width}}  b = {b}")
        print(f"{'':<{width}}  t = {t}")
    return 0


def cmd_hom(args) -> int:
    h = _realization(args)
    src, tgt = parse_object(h, args.source), parse_object(h, args.target)
    basis = hom_basis(src, tgt, args.degree)
    if args.json:
        print(json.dumps({"source": src.label(), "target": tgt.label(), "degree": args.degree,
                          "dim": len(basis), "basis": [f.render() for f in basis]}, indent=2))
        return 0
    print(f"dim Hom({src.label()}, {tgt.label()}) in degree {args.degree} = {len(basis)}")
    if args.verbose:
        for i, f in enumerate(basis):
            print(f"  [{i}] {f.render()}")
    return 0


def cmd_verify(args) -> int:
    ids = [e.id for e in ENTRIES.values() if e.in_all] if args.id == "all" else [args.id]
    h = None
    if args.realization or args.builtin:
        h = _realization(args)
    reports = [verify(i, args.field or "Q", h) for i in ids]
    if args.json:
        out = [r.to_json() for r in reports]
        print(json.dumps(out[0] if len(out) == 1 else out, indent=2))
    else:
        for r in reports:
            print(r.render())
    return 0 if all(r.ok for r in reports) else 1


def cmd_list(args) -> int:
    for e in ENTRIES.values():
        note = "" if e.in_all else "  (expected to fail; excluded from 'all')"
        print(f"{e.id:<20} {e.realization:<4} {e.description}{note}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="koszulhecke", description="Hecke algebra, Soergel bimodule and "
                                "monodromic complex computations with exact arithmetic.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, builtin_help):
        sp.add_argument("--builtin", help=builtin_help)
        sp.add_argument("--realization", help="realization file (YAML or JSON)")
        sp.add_argument("--field", help="Q or Fp for an odd prime p")
        sp.add_argument("--json", action="store_true", help="JSON output")

    kl = sub.add_parser("kl", help="Kazhdan-Lusztig basis and its dual in the standard basis")
    common(kl, f"group: {', '.join(GROUPS)} (default S3)")
    kl.add_argument("--maxlen", type=int, help="length bound (default: all elements, or 4 if infinite)")
    kl.set_defaults(func=cmd_kl)

    hom = sub.add_parser("hom", help="graded Hom space between Bott-Samelson sums")
    common(hom, "realization: SL2, SL3, B2, G2, A1~ (default SL2)")
    hom.add_argument("source", help="object such as 's', 'st(2)', 'R(1)', 's(-1) + s(1)'")
    hom.add_argument("target")
    hom.add_argument("--degree", type=int, default=0)
    hom.add_argument("-v", "--verbose", action="store_true", help="print a basis")
    hom.set_defaults(func=cmd_hom)

    ver = sub.add_parser("verify", help="run the checks of a catalog entry, or all of them")
    common(ver, "override the realization an entry uses (SL2, SL3, ...)")
    ver.add_argument("id", help="entry id or 'all'")
    ver.set_defaults(func=cmd_verify)

    ls = sub.add_parser("list", help="list catalog entries")
    ls.set_defaults(func=cmd_list)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (InputError, CatalogError, CoxeterError, FieldError, RealizationError, BimodError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
