import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tritorus.angles import HALF_PI, PI, ZERO, PiRational, Sheet, make_triple, taxonomy
from tritorus.torus import (
    LocusId,
    OrientationSign,
    TorusPoint,
    classify,
    element_order,
    identity,
    in_locus,
    inverse,
    mul,
    orientation,
    power,
    project_relative,
    rho,
    rho_preimages,
)


def pr(n, d=1):
    return PiRational(n, d)


def pt(n1, d1, n2, d2):
    return TorusPoint(pr(n1, d1), pr(n2, d2))


def sheet_grid(den):
    """All angle triples with denominators dividing den, on both sheets."""
    for i in range(den + 1):
        for j in range(den + 1 - i):
            k = den - i - j
            for sign in (1, -1):
                yield make_triple(
                    pr(sign * i, den), pr(sign * j, den), pr(sign * k, den)
                )


points = st.builds(
    TorusPoint,
    st.fractions(max_denominator=60).map(PiRational.from_fraction),
    st.fractions(max_denominator=60).map(PiRational.from_fraction),
)


class TestRho:
    def test_equilateral_image(self):
        assert rho(make_triple(pr(1, 3), pr(1, 3), pr(1, 3))) == pt(2, 3, 4, 3)

    def test_vertex_maps_to_identity(self):
        assert rho(make_triple(PI, ZERO, ZERO)) == identity()

    def test_right_isosceles_lands_on_right_locus(self):
        p = rho(make_triple(HALF_PI, pr(1, 4), pr(1, 4)))
        assert p == pt(1, 2, 1, 1)
        assert in_locus(p, LocusId.R_A)

    def test_degenerate_maps_to_degenerate(self):
        for t in sheet_grid(8):
            if t.is_degenerate():
                assert rho(t).is_degenerate()


class TestPreimages:
    def test_identity_has_six_vertex_preimages(self):
        pre = rho_preimages(identity())
        assert len(pre) == 6
        coeffs = [tuple(a.coeff for a in t.angles) for t in pre]
        assert coeffs == [
            (1, 0, 0), (0, 1, 0), (0, 0, 1),
            (-1, 0, 0), (0, -1, 0), (0, 0, -1),
        ]

    def test_degenerate_pair(self):
        pre = rho_preimages(pt(2, 3, 0, 1))
        assert [t.sheet for t in pre] == [Sheet.PLUS, Sheet.MINUS]
        assert pre[0] == make_triple(ZERO, pr(1, 3), pr(2, 3))
        assert pre[1] == make_triple(ZERO, pr(-2, 3), pr(-1, 3))

    def test_nondegenerate_unique(self):
        pre = rho_preimages(pt(2, 3, 4, 3))
        assert pre == (make_triple(pr(1, 3), pr(1, 3), pr(1, 3)),)

    def test_inversion_formulas_against_brute_force(self):
        # Oracle: enumerate rho over a full grid of triples and compare
        # fibers with rho_preimages, independently of the inversion formulas.
        den = 12
        fibers = {}
        for t in sheet_grid(den):
            fibers.setdefault(rho(t), set()).add(t)
        assert len(fibers) > 100
        for p, triples in fibers.items():
            assert set(rho_preimages(p)) == triples

    def test_round_trip_on_grid(self):
        for t in sheet_grid(16):
            pre = rho_preimages(rho(t))
            assert t in pre
            for u in pre:
                assert rho(u) == rho(t)


class TestOrientation:
    def test_examples(self):
        assert orientation(pt(2, 3, 4, 3)) is OrientationSign.POSITIVE
        assert orientation(pt(4, 3, 2, 3)) is OrientationSign.NEGATIVE
        assert orientation(pt(1, 1, 1, 1)) is OrientationSign.ZERO

    def test_rho_preserves_orientation(self):
        for t in sheet_grid(10):
            o = orientation(rho(t))
            if t.is_degenerate():
                assert o is OrientationSign.ZERO
            elif t.sheet is Sheet.PLUS:
                assert o is OrientationSign.POSITIVE
            else:
                assert o is OrientationSign.NEGATIVE


class TestGroupLaw:
    def test_equilateral_classes_mutually_inverse(self):
        e1 = pt(2, 3, 4, 3)
        assert mul(e1, e1) == pt(4, 3, 2, 3)
        assert mul(e1, inverse(e1)) == identity()

    def test_identity_law(self):
        p = pt(1, 5, 7, 5)
        assert mul(p, identity()) == p

    def test_order_four(self):
        assert power(pt(1, 2, 1, 1), 4) == identity()

    @given(points, points, points)
    def test_abelian_group_axioms(self, p, q, r):
        assert mul(p, q) == mul(q, p)
        assert mul(mul(p, q), r) == mul(p, mul(q, r))
        assert mul(p, inverse(p)) == identity()
        assert mul(p, identity()) == p

    @given(points, st.integers(min_value=-5, max_value=8))
    def test_power_is_repeated_mul(self, p, n):
        expected = identity()
        step = p if n >= 0 else inverse(p)
        for _ in range(abs(n)):
            expected = mul(expected, step)
        assert power(p, n) == expected


class TestElementOrder:
    @pytest.mark.parametrize(
        "point,order",
        [
            (pt(2, 3, 4, 3), 3),
            (pt(1, 1, 0, 1), 2),
            (pt(1, 2, 1, 1), 4),
            (pt(0, 1, 0, 1), 1),
            (pt(1, 5, 3, 7), 70),
        ],
    )
    def test_witnesses(self, point, order):
        assert element_order(point) == order

    @given(points)
    def test_order_is_least_annihilator(self, p):
        n = element_order(p)
        assert power(p, n) == identity()
        for m in range(1, n):
            if n % m == 0:
                assert power(p, m) != identity()


class TestLoci:
    def test_membership_witnesses(self):
        assert in_locus(pt(1, 2, 1, 1), LocusId.R_A)
        e1 = pt(2, 3, 4, 3)
        assert all(in_locus(e1, l) for l in (LocusId.I_A, LocusId.I_B, LocusId.I_C))
        assert in_locus(pt(1, 5, 2, 5), LocusId.I_A)
        assert not in_locus(pt(1, 5, 2, 5), LocusId.I_B)

    def test_equilateral3(self):
        for p in (identity(), pt(2, 3, 4, 3), pt(4, 3, 2, 3)):
            assert in_locus(p, LocusId.EQUILATERAL3)
        assert not in_locus(pt(1, 3, 2, 3), LocusId.EQUILATERAL3)

    @pytest.mark.parametrize(
        "locus",
        [
            LocusId.D_A, LocusId.D_B, LocusId.D_C,
            LocusId.I_A, LocusId.I_B, LocusId.I_C,
            LocusId.IPERP_A, LocusId.IPERP_B, LocusId.EQUILATERAL3,
        ],
    )
    def test_subgroup_closure(self, locus):
        rng = random.Random(7)
        members = [p for p in _locus_samples(locus, rng)]
        assert members
        for p in members:
            assert in_locus(p, locus)
            assert in_locus(inverse(p), locus)
            for q in members:
                assert in_locus(mul(p, q), locus)

    @pytest.mark.parametrize(
        "coset,subgroup",
        [
            (LocusId.R_A, LocusId.D_A),
            (LocusId.R_B, LocusId.D_B),
            (LocusId.R_C, LocusId.D_C),
            (LocusId.ANTI_RIGHT, LocusId.I_C),
        ],
    )
    def test_coset_property(self, coset, subgroup):
        rng = random.Random(11)
        reps = list(_locus_samples(coset, rng))
        subs = list(_locus_samples(subgroup, rng))
        for r in reps:
            assert not in_locus(r, subgroup)
            for s in subs:
                assert in_locus(mul(r, s), coset)

    @pytest.mark.parametrize(
        "right,degenerate",
        [
            (LocusId.R_A, LocusId.D_A),
            (LocusId.R_B, LocusId.D_B),
            (LocusId.R_C, LocusId.D_C),
        ],
    )
    def test_right_cosets_are_order_two_in_quotient(self, right, degenerate):
        rng = random.Random(13)
        for r in _locus_samples(right, rng):
            assert in_locus(mul(r, r), degenerate)
            assert not in_locus(r, degenerate)


def _locus_samples(locus, rng, count=8):
    """Random exact points on a locus, from its parametric form."""
    params = [PiRational(rng.randint(0, 119), 60) for _ in range(count)]
    forms = {
        LocusId.D_A: lambda x: TorusPoint(x, ZERO),
        LocusId.D_B: lambda x: TorusPoint(ZERO, x),
        LocusId.D_C: lambda x: TorusPoint(x, x),
        LocusId.I_A: lambda x: TorusPoint(x, x * 2),
        LocusId.I_B: lambda x: TorusPoint(x * 2, x),
        LocusId.I_C: lambda x: TorusPoint(x, -x),
        LocusId.IPERP_A: lambda x: TorusPoint(x * -2, x),
        LocusId.IPERP_B: lambda x: TorusPoint(x, x * -2),
        LocusId.R_A: lambda x: TorusPoint(x, PI),
        LocusId.R_B: lambda x: TorusPoint(PI, x),
        LocusId.R_C: lambda x: TorusPoint(x, x + PI),
        LocusId.ANTI_RIGHT: lambda x: TorusPoint(x, PI - x),
        LocusId.EQUILATERAL3: None,
    }
    if locus is LocusId.EQUILATERAL3:
        return [TorusPoint(ZERO, ZERO), pt(2, 3, 4, 3), pt(4, 3, 2, 3)]
    build = forms[locus]
    out = [build(x) for x in params]
    if locus in (LocusId.R_A, LocusId.R_B, LocusId.R_C, LocusId.ANTI_RIGHT):
        # avoid the parameter values that fall back into the subgroup itself
        out = [p for p in out if not in_locus(p, LocusId.EQUILATERAL3)]
    return out


class TestClassify:
    def test_identity(self):
        c = classify(identity())
        assert c.degenerate
        assert c.orientation is OrientationSign.ZERO
        assert c.flags.equilateral
        assert c.multiplicity == 12

    def test_equilateral(self):
        c = classify(pt(2, 3, 4, 3))
        assert not c.degenerate
        assert c.orientation is OrientationSign.POSITIVE
        assert c.flags.equilateral
        assert c.multiplicity == 6

    def test_right_isosceles(self):
        c = classify(pt(1, 2, 1, 1))
        assert c.flags.right_vertices == frozenset({"A"})
        assert c.flags.isosceles
        assert c.multiplicity == 2
        assert LocusId.R_A in c.loci

    def test_degenerate_flags_shared_across_preimages(self):
        rng = random.Random(5)
        for locus in (LocusId.D_A, LocusId.D_B, LocusId.D_C):
            for p in _locus_samples(locus, rng):
                pre = rho_preimages(p)
                flags = {taxonomy(t) for t in pre}
                assert len(flags) == 1


class TestProjectRelative:
    def test_third_argument_zero(self):
        assert project_relative(pr(1, 2), PI, ZERO) == pt(1, 2, 1, 1)

    def test_rotation_invariance(self):
        shift = pr(1, 7)
        assert project_relative(pr(1, 2) + shift, PI + shift, shift) == pt(1, 2, 1, 1)

    def test_normalization(self):
        p = project_relative(ZERO, ZERO, pr(1, 3))
        assert p == pt(5, 3, 5, 3)
        assert p.is_degenerate()

    @given(
        st.fractions(max_denominator=30), st.fractions(max_denominator=30),
        st.fractions(max_denominator=30), st.fractions(max_denominator=30),
    )
    def test_invariance_property(self, a, b, c, s):
        th = [PiRational.from_fraction(x) for x in (a, b, c)]
        sh = PiRational.from_fraction(s)
        assert project_relative(*th) == project_relative(*(x + sh for x in th))
