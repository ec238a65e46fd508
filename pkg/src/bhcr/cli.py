"""Command line front end.

Exit codes: 0 success, 1 input error, 2 mathematical obstruction,
3 internal consistency failure or failed verification.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import report as rp
from .delsarte import parse_delsarte
from .errors import BHCRError, InputError, InternalError
from .invariants import NikulinTriple
from .symmetries import parse_generators


def _vars(text):
    return [v.strip() for v in text.split(",")] if text else None


def _render(obj, indent=0, out=None):
    out = [] if out is None else out
    pad = "  " * indent
    if isinstance(obj, dict):
        for k, v in obj.items():
            if v is None:
                continue
            if isinstance(v, (dict, list)) and v and not _is_flat(v):
                out.append(f"{pad}{k}:")
                _render(v, indent + 1, out)
            else:
                out.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, dict):
                out.append(f"{pad}-")
                _render(v, indent + 1, out)
            else:
                out.append(f"{pad}- {_inline(v)}")
    return out


def _is_flat(v):
    if isinstance(v, dict):
        return False
    return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _is_flat(x)) for x in v)


def _inline(v):
    if isinstance(v, list):
        return "(" + ", ".join(_inline(x) for x in v) + ")"
    return str(v)


def _emit(report: rp.AnalysisReport, as_json: bool):
    if as_json:
        print(report.to_json())
    else:
        print("\n".join(_render(report.to_dict())))


def cmd_analyze(args):
    p = parse_delsarte(args.polynomial, _vars(args.vars))
    rep = rp.analyze(p, with_transpose=args.transpose, require_cy=args.require_cy)
    _emit(rep, args.json)
    return 0


def cmd_transpose(args):
    p = parse_delsarte(args.polynomial, _vars(args.vars))
    _emit(rp.transpose_report(p), args.json)
    return 0


def cmd_group(args):
    p = parse_delsarte(args.polynomial, _vars(args.vars))
    gens = parse_generators(args.generators) if args.generators is not None else None
    rep = rp.group_report(p, args.kind, gens, with_transposed=args.transposed)
    _emit(rep, args.json)
    return 0 if rep.all_verdicts_pass() else 3


def cmd_mirror_bv(args):
    curve = parse_delsarte(args.curve, _vars(args.curve_vars))
    surface = parse_delsarte(args.surface, _vars(args.surface_vars))
    triple = NikulinTriple(*args.triple) if args.triple else None
    rep = rp.mirror_bv(
        curve, surface,
        parse_generators(args.curve_generators),
        parse_generators(args.surface_generators),
        triple,
    )
    _emit(rep, args.json)
    if not rep.all_verdicts_pass():
        return 3
    if rep.verdicts.get("triple_errors"):
        return 2
    return 0


def cmd_table(args):
    rep = rp.table_report(args.mode)
    if args.json:
        _emit(rep, True)
    else:
        for row in rep.groups["rows"]:
            status = "" if args.mode == "print" else ("  ok" if not row["failures"] else f"  MISMATCH {row['failures']}")
            print(f"({row['mirror']:>2}){row['index']:<3} {tuple(row['weights'])!s:<10} "
                  f"{row['potential']:<26} {row['sl_order']:>2} {row['sl_tilde_order']:>2}{status}")
    if args.mode == "verify" and not rep.all_verdicts_pass():
        bad = [r for r in rep.groups["rows"] if r["failures"]]
        print(f"RowMismatch: row {bad[0]['index']} field {bad[0]['failures'][0]}", file=sys.stderr)
        return InternalError.exit_code
    return 0


def cmd_triple(args):
    rep, errors = rp.triple_report(NikulinTriple(args.r, args.a, args.delta))
    _emit(rep, args.json)
    for e in errors:
        print(f"error: {e}", file=sys.stderr)
    return 2 if errors else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bhcr",
        description="Invertible potentials, BHK transposition and Borcea-Voisin mirror models.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, poly=True):
        if poly:
            sp.add_argument("polynomial", help="e.g. 'x0^2+x1^4+x2^4'")
            sp.add_argument("--vars", help="comma-separated variable order")
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("analyze", help="weights, predicates and group orders of a potential")
    common(sp)
    sp.add_argument("--transpose", action="store_true", help="also report the transposed potential")
    sp.add_argument("--require-cy", action="store_true", help="fail unless the Calabi-Yau condition holds")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("transpose", help="transposed potential and its weights")
    common(sp)
    sp.set_defaults(func=cmd_transpose)

    sp = sub.add_parser("group", help="enumerate Aut, SL or SL/J, or a subgroup of it")
    common(sp)
    sp.add_argument("--kind", choices=["aut", "sl", "sltilde"], default="sltilde")
    sp.add_argument("--generators", help="phase vectors 'a,b,c;d,e,f' (rationals)")
    sp.add_argument("--transposed", action="store_true", help="also compute the transposed group")
    sp.set_defaults(func=cmd_group)

    sp = sub.add_parser("mirror-bv", help="twist model of curve x surface and its BHCR mirror")
    sp.add_argument("curve", help="x0^2 + f(x1, x2)")
    sp.add_argument("surface", help="y0^2 + g(y1, y2, y3)")
    sp.add_argument("--curve-vars")
    sp.add_argument("--surface-vars")
    sp.add_argument("--curve-generators", "--generators", dest="curve_generators",
                    help="generators of G_E in SL(W_E)/J")
    sp.add_argument("--surface-generators", help="generators of G_S in SL(W_S)/J")
    sp.add_argument("--triple", nargs=3, type=int, metavar=("R", "A", "DELTA"),
                    help="Nikulin triple of the surface involution")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_mirror_bv)

    sp = sub.add_parser("table", help="rebuild or verify the elliptic-curve mirror table")
    sp.add_argument("mode", choices=["verify", "print"], nargs="?", default="verify")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("triple", help="invariants of a Nikulin triple (r, a, delta)")
    sp.add_argument("r", type=int)
    sp.add_argument("a", type=int)
    sp.add_argument("delta", type=int)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_triple)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    warnings.simplefilter("default")
    try:
        return args.func(args)
    except BHCRError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return InputError.exit_code


if __name__ == "__main__":
    sys.exit(main())
