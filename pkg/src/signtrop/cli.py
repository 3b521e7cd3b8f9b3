"""Command-line front end.

Exit codes: 0 success, 1 domain error (or a failed axiom check), 2 parse or
usage error. Polynomials ascend by degree and are ``;``-separated.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .axioms import run_suite
from .classical import ConstructionFailed, FactoredHahnPoly, lift, lift_root_counts, reports_json
from .config import HarnessConfig
from .hyperfield import FIELDS, MORPHISMS, DomainError, ParseError, as_rat
from .hyperpoly import HPoly, SearchTruncated, mult, mult_recursive
from .newton import initial_form_T, initial_form_TR, newton_polygon
from .render import render_ascii, render_svg

# options that take a value; a following token such as "-1/2" is that value
_VALUE_OPTS = {"-f", "--hyperfield", "--at", "--svg", "--seed", "--samples", "--config", "--file"}


def _protect_values(argv: list[str]) -> list[str]:
    """Keep tokens like ``-1;+1`` or ``-1/2`` from being read as options."""
    out: list[str] = []
    for tok in argv:
        looks_negative = len(tok) > 1 and tok[0] == "-" and not tok[1].isalpha() and tok[1] != "-"
        if not looks_negative:
            out.append(tok)
        elif out and out[-1] in _VALUE_OPTS:
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(f"--input={tok}")
    return out


def _read_input(args) -> str:
    if args.file:
        return sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
    text = args.input if args.input is not None else args.input_opt
    if text is None:
        raise ParseError("no input given (pass it inline or with --file)")
    return text


def _poly(args) -> HPoly:
    return HPoly.parse(FIELDS[args.hyperfield], _read_input(args).strip())


def _cmd_mult(args) -> int:
    p = _poly(args)
    if args.at is None:
        raise ParseError("mult needs --at")
    a = p.field.parse(args.at)
    m = mult_recursive(p, a) if args.recursive else mult(p, a)
    if args.json:
        print(json.dumps({"poly": str(p), "at": p.field.format(a), "mult": m}))
    else:
        print(m)
    return 0


def _cmd_newton(args) -> int:
    p = _poly(args)
    poly = newton_polygon(p)
    if args.svg:
        Path(args.svg).write_text(render_svg(p, poly))
    if args.json:
        print(json.dumps({
            "vertices": [[i, str(v)] for i, v in poly.vertices],
            "edges": [{"slope": str(e.slope), "hlen": e.hlen, "support": list(e.support)}
                      for e in poly.edges],
        }, indent=2))
    elif args.edges:
        print("slopes: " + ", ".join(str(e.slope) for e in poly.edges)
              + "; hlens: " + ", ".join(str(e.hlen) for e in poly.edges))
    elif args.ascii:
        print(render_ascii(p, poly), end="")
    elif not args.svg:
        print("vertices: " + ", ".join(f"({i},{v})" for i, v in poly.vertices))
        for e in poly.edges:
            print(f"edge slope={e.slope} hlen={e.hlen} support={{{', '.join(map(str, e.support))}}}")
    return 0


def _cmd_initial(args) -> int:
    p = _poly(args)
    if args.at is None:
        raise ParseError("initial needs --at <rational weight>")
    try:
        a = as_rat(args.at)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"expected a rational weight, got {args.at!r}") from None
    form = initial_form_TR(p, a) if p.field.name == "TR" else initial_form_T(p, a)
    print(json.dumps({"initial": str(form), "support": form.support()}) if args.json else form)
    return 0


def _cmd_lift(args) -> int:
    p = _poly(args)
    P = lift(p)
    if p.field.name == "S":
        p = p.map(MORPHISMS["S->TR"])
    counts = lift_root_counts(p, P)
    if args.json:
        print(json.dumps({
            "lift": [str(c) for c in P.coeffs],
            "edges": [{"r": str(r), "positive": pos, "mult_pos": mp, "negative": neg, "mult_neg": mn}
                      for r, pos, mp, neg, mn in counts],
        }, indent=2))
    else:
        print(P)
        for r, pos, mp, neg, mn in counts:
            print(f"r={r} positive={pos} mult={mp} negative={neg} mult_neg={mn}")
    return 0


def _cmd_verify(args) -> int:
    F = FactoredHahnPoly.parse(_read_input(args))
    if args.negate:
        F = F.negate_x()
    reports = F.verify()
    if args.json:
        print(reports_json(reports))
    else:
        for rep in reports:
            print(rep.line())
    return 0 if all(r.bound_ok and r.parity_ok for r in reports) else 1


def _cmd_axioms(args) -> int:
    cfg = HarnessConfig.load(args.config) if args.config else HarnessConfig()
    samples = args.samples if args.samples is not None else cfg.axiom_samples
    seed = args.seed if args.seed is not None else cfg.seed
    reports = run_suite(samples, seed, cfg.axiom_grid)
    ok = all(r.ok for r in reports)
    if args.json:
        print(json.dumps({
            "seed": seed, "samples": samples, "ok": ok,
            "laws": [{"subject": r.subject, "law": law.law, "checked": law.checked, "ok": law.ok}
                     for r in reports for law in r.laws.values()],
        }, indent=2))
    else:
        for r in reports:
            print("\n".join(r.lines()))
        print("all laws hold" if ok else "FAILURES above")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signtrop", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def poly_command(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", help="inline input")
        p.add_argument("--input", dest="input_opt", help=argparse.SUPPRESS)
        p.add_argument("--file", help="read input from a file ('-' for stdin)")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    def field_flag(p, default="TR", choices=("K", "S", "T", "TR")):
        p.add_argument("-f", "--hyperfield", default=default, choices=choices)

    p = poly_command("mult", _cmd_mult, "multiplicity of a root")
    field_flag(p)
    p.add_argument("--at", help="the root, in the hyperfield's text form")
    p.add_argument("--recursive", action="store_true", help="use the factorization search")

    p = poly_command("newton", _cmd_newton, "Newton polygon over T or TR")
    field_flag(p, choices=("T", "TR"))
    p.add_argument("--edges", action="store_true", help="one line of slopes and lengths")
    p.add_argument("--ascii", action="store_true", help="text plot")
    p.add_argument("--svg", help="write an SVG picture to this path")

    p = poly_command("initial", _cmd_initial, "initial form In_a over T or TR")
    field_flag(p, choices=("T", "TR"))
    p.add_argument("--at", help="rational weight a (selects the edge of slope -a)")

    p = poly_command("lift", _cmd_lift, "Hahn polynomial with prescribed valuation")
    field_flag(p, choices=("S", "TR"))

    p = poly_command("verify", _cmd_verify, "check the real-root bound on a factored polynomial")
    p.add_argument("--negate", action="store_true", help="substitute x -> -x first")

    p = sub.add_parser("axioms", help="randomized hyperfield axiom suite")
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--config", help="key=value harness config file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_axioms)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, SearchTruncated, ConstructionFailed) as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


__all__ = ["main", "build_parser"]
