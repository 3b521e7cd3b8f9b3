"""Recompute the two worked examples and write their Newton polygon pictures."""

import argparse
from pathlib import Path

from signtrop.classical import FactoredHahnPoly, edge_residue
from signtrop.hahn import HahnReal, poly_valuation, t
from signtrop.hyperfield import TR, T, TRElem
from signtrop.hyperpoly import HPoly, mult, substitute_neg
from signtrop.newton import initial_form_TR, newton_polygon
from signtrop.render import render_ascii, render_svg


def example_one(out: Path) -> None:
    y = t(1)
    F = FactoredHahnPoly(HahnReal.const(1), ((y, 1), (-y, 1), (HahnReal.const(1), 2)))
    P = F.expand()
    p = poly_valuation(P)
    print("P(x)      =", P)
    print("v_R(P)    =", p)
    print(render_ascii(p))
    for e in newton_polygon(p).edges:
        r = -e.slope
        print(f"edge r={r}: In = {initial_form_TR(p, r)}, residue = {edge_residue(P, r)}, "
              f"mult(+1,r) = {mult(p, TRElem(1, r))}, mult(-1,r) = {mult(p, TRElem(-1, r))}")
    print("reports for P(x):")
    for rep in F.verify():
        print("  " + rep.line())
    print("reports for P(-x):")
    for rep in F.negate_x().verify():
        print("  " + rep.line())
    print("v_R(P(-x)) =", substitute_neg(p))
    (out / "example_1_3.svg").write_text(render_svg(p))


def figure_two(out: Path) -> None:
    p = HPoly.parse(T, "2;inf;1;-1/2;-1;1/2;1")
    print(render_ascii(p))
    signed = HPoly.parse(TR, "(+,2);inf;(+,1);(-,-1/2);(-,-1);(+,1/2);(+,1)")
    (out / "figure_2.svg").write_text(render_svg(signed))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figures", help="directory for the SVG files")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    print("== four-root example ==")
    example_one(out)
    print("\n== seven-term polygon ==")
    figure_two(out)
    print(f"\nSVGs written to {out}/")


if __name__ == "__main__":
    main()
