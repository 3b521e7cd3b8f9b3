from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signtrop.classical import (
    FactoredHahnPoly, converse_descartes, edge_gamma, edge_residue, edge_transform, lift,
    lift_root_counts, reports_json, residue, verify_theorem_B,
)
from signtrop.config import HarnessConfig
from signtrop.generators import random_factored, rng_for
from signtrop.hahn import HahnPoly, HahnReal, poly_valuation, t
from signtrop.hyperfield import INF, MORPHISMS, TR, DomainError, ParseError, S, TRElem
from signtrop.hyperpoly import HPoly, mult, substitute_neg
from signtrop.newton import initial_form_TR, newton_polygon, sign_changes
from signtrop.ratpoly import RatPoly, count_negative_roots, count_positive_roots

from strategies import hahn_polys, hpolys, tr_polys

Y = t(1)
EX_P = HahnPoly((-Y * Y, 2 * Y * Y, 1 - Y * Y, -2, 1))
EX_ROOTS = ((Y, 1), (-Y, 1), (HahnReal.const(1), 2))


class TestEdgeTransform:
    def test_example_edges(self):
        R = edge_transform(EX_P, 1, 2)
        assert [c.valuation for c in R.coeffs] == [0, 1, 0, 1, 2]
        assert edge_transform(EX_P, 0, 0) == EX_P
        assert edge_gamma(EX_P, 1) == 2 and edge_gamma(EX_P, 0) == 0

    def test_monomial(self):
        for a, k, lam in [(F(3), 2, F(-1)), (F(1, 2), 3, F(2, 3))]:
            P = HahnPoly((0,) * k + (t(a),))
            assert edge_transform(P, lam, a + k * lam) == HahnPoly((0,) * k + (1,))

    def test_gamma_mismatch(self):
        with pytest.raises(DomainError):
            edge_transform(EX_P, 1, 3)
        with pytest.raises(DomainError):
            edge_transform(EX_P, 1, 1)

    def test_residues(self):
        assert residue(edge_transform(EX_P, 1, 2)) == RatPoly((-1, 0, 1))
        assert residue(edge_transform(EX_P, 0, 0)) == RatPoly((0, 0, 1, -2, 1))
        assert residue(HahnPoly((1,))) == RatPoly((1,))
        with pytest.raises(DomainError):
            residue(HahnPoly((t(-1),)))

    @given(hahn_polys.filter(lambda P: P.coeffs))
    def test_residue_signs_match_initial_form(self, P):
        p = poly_valuation(P)
        t0 = MORPHISMS["t0"]
        for e in newton_polygon(p).edges:
            r = -e.slope
            R = edge_transform(P, r, edge_gamma(P, r))
            res = residue(R)
            signs = [(res[i] > 0) - (res[i] < 0) for i in range(len(R.coeffs))]
            assert [t0(c) for c in poly_valuation(R).coeffs] == signs
            assert HPoly(S, tuple(signs)) == initial_form_TR(p, r)


class TestTheoremB:
    def test_example(self):
        reps = verify_theorem_B(EX_P, EX_ROOTS)
        assert [(r.edge.slope, r.delta, r.root_count) for r in reps] == [(-1, 1, 1), (0, 2, 2)]
        neg = verify_theorem_B(EX_P.substitute_neg(), [(-a, m) for a, m in EX_ROOTS])
        assert [(r.delta, r.root_count) for r in neg] == [(1, 1), (0, 0)]
        assert all(r.bound_ok and r.parity_ok for r in reps + neg)

    def test_definite_quadratic(self):
        F_ = FactoredHahnPoly(HahnReal.const(1), ((t(1), 1),), ((t(2), t(1)),))
        P = F_.expand()
        assert P == HahnPoly((t(1), t(2), 1)) * HahnPoly.x_minus(t(1))
        reps = F_.verify()
        by_slope = {r.edge.slope: r for r in reps}
        assert by_slope[F(-1)].root_count == 1
        assert all(r.bound_ok and r.parity_ok for r in reps)
        assert sum(r.delta - r.root_count for r in reps) % 2 == 0

    def test_wrong_roots_rejected(self):
        with pytest.raises(DomainError):
            verify_theorem_B(EX_P, [(t(2), 1)])
        with pytest.raises(DomainError):
            verify_theorem_B(EX_P, [(HahnReal.const(1), 3)])

    def test_report_formats(self):
        reps = verify_theorem_B(EX_P, EX_ROOTS)
        assert reps[0].line() == "slope=-1 hlen=2 delta=1 roots=1 bound=ok parity=ok"
        assert '"parity_ok": true' in reports_json(reps)

    def test_generated_instances(self):
        cfg = HarnessConfig()
        for i in range(40):
            F_ = random_factored(rng_for(cfg, "unit", i), cfg)
            for rep in F_.verify() + F_.negate_x().verify():
                assert rep.bound_ok and rep.parity_ok, (str(F_), rep.line())

    def test_negate_x_expands_to_reflection(self):
        cfg = HarnessConfig()
        for i in range(10):
            F_ = random_factored(rng_for(cfg, "neg", i), cfg)
            assert F_.negate_x().expand() == F_.expand().substitute_neg()


class TestFactoredText:
    def test_round_trip(self):
        cfg = HarnessConfig()
        for i in range(20):
            F_ = random_factored(rng_for(cfg, "text", i), cfg)
            assert FactoredHahnPoly.parse(str(F_)) == F_

    def test_semicolons_and_comments(self):
        a = FactoredHahnPoly.parse("lead: 2; root: t^(1) @ 2  # double\nquad: 0, 1")
        assert a == FactoredHahnPoly(HahnReal.const(2), ((t(1), 2),), ((HahnReal(), HahnReal.const(1)),))

    @pytest.mark.parametrize("text,line", [
        ("lead: 1\nroot t", 2),
        ("lead: 1\nroot: t @ 0", 2),
        ("quad: 1", 1),
        ("lead: 0", 1),
        ("colour: red", 1),
    ])
    def test_errors(self, text, line):
        with pytest.raises(ParseError) as exc:
            FactoredHahnPoly.parse(text)
        assert exc.value.line == line


class TestConverseDescartes:
    def test_examples(self):
        q = converse_descartes(HPoly(S, (-1, 1)))
        assert q.signs() == [-1, 1] and count_positive_roots(q) == 1
        q = converse_descartes(HPoly(S, (1, -1, 1)))
        assert q.signs() == [1, -1, 1] and count_positive_roots(q) == 2
        q = converse_descartes(HPoly(S, (1, 0, 1)))
        assert q.signs() == [1, 0, 1] and count_positive_roots(q) == count_negative_roots(q) == 0

    @settings(max_examples=150, deadline=None)
    @given(hpolys("S", max_degree=7))
    def test_signs_and_counts(self, s):
        q = converse_descartes(s)
        assert q.signs() == list(s.coeffs)
        assert count_positive_roots(q) == sign_changes(s)
        assert count_negative_roots(q) == sign_changes(substitute_neg(s))


class TestLift:
    def test_example(self):
        p = poly_valuation(EX_P)
        P = lift(p)
        assert poly_valuation(P) == p
        assert newton_polygon(poly_valuation(P)).vertices == ((0, 2), (2, 0), (4, 0))
        assert [(pos, neg) for _, pos, _, neg, _ in lift_root_counts(p, P)] == [(1, 1), (2, 0)]

    def test_monomial(self):
        p = HPoly(TR, (INF, INF, TRElem(1, F(3, 2))))
        assert lift(p) == HahnPoly((0, 0, t(F(3, 2))))

    def test_sign_polynomial(self):
        P = lift(HPoly(S, (-1, 0, 1)))
        assert all(not c or c.valuation == 0 for c in P.coeffs)
        assert count_positive_roots(residue(P)) == 1

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            lift(HPoly(TR, ()))

    @settings(max_examples=150, deadline=None)
    @given(tr_polys)
    def test_round_trip_and_counts(self, p):
        P = lift(p)
        assert poly_valuation(P) == p
        for r, pos, mpos, neg, mneg in lift_root_counts(p, P):
            assert pos == mpos == mult(p, TRElem(1, r))
            assert neg == mneg
            assert count_positive_roots(edge_residue(P, r)) == pos
