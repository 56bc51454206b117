import math
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from hnlab.charges import (
    Charge,
    DomainError,
    Phase,
    PlaneVector,
    RationalCut,
    SurdCut,
    central_charge,
    cut_cmp,
    euler_form,
    mass_squared,
    phase_cmp,
    reduced_phase,
    slope,
)

charges = st.builds(
    Charge, st.integers(-50, 50), st.integers(-50, 50)
).filter(lambda c: not c.is_zero())


class TestSlope:
    def test_line_bundle(self):
        assert slope(Charge(1, 0)) == 0

    def test_torsion(self):
        assert slope(Charge(0, 5)) == math.inf

    def test_fraction(self):
        assert slope(Charge(2, 3)) == Fraction(3, 2)

    def test_zero_rejected(self):
        with pytest.raises(DomainError, match="slope undefined on zero class"):
            slope(Charge(0, 0))


class TestCentralCharge:
    def test_line_bundle_is_i(self):
        assert central_charge(Charge(1, 0)) == PlaneVector(0, 1)

    def test_point_is_minus_one(self):
        assert central_charge(Charge(0, 1)) == PlaneVector(-1, 0)

    def test_zero(self):
        assert central_charge(Charge(0, 0)) == PlaneVector(0, 0)


class TestReducedPhase:
    def test_structure_sheaf_half(self):
        p = reduced_phase(Charge(1, 0))
        assert p == Phase((0, 1), 0)
        assert p.approx() == 0.5

    def test_torsion_one(self):
        p = reduced_phase(Charge(0, 3))
        assert p == Phase((-1, 0), 0)
        assert p.approx() == 1.0

    def test_quarter(self):
        assert reduced_phase(Charge(1, -1)) == Phase((1, 1), 0)

    def test_lower_half_gets_negative_strip(self):
        p = reduced_phase(Charge(-1, 0))
        assert p.shift == -1
        assert p.approx() == -0.5

    def test_negation_raises_by_one(self, rng):
        for _ in range(200):
            c = Charge(rng.randint(-9, 9), rng.randint(-9, 9))
            if c.is_zero():
                continue
            p, q = reduced_phase(c), reduced_phase(-c)
            assert abs(p.approx() - q.approx()) == pytest.approx(1.0)

    def test_phase_charge_round_trip(self, rng):
        for _ in range(200):
            p = reduced_phase(
                Charge(rng.randint(-9, 9), rng.randint(-9, 9) or 1),
                extra_shift=rng.randint(-2, 2),
            )
            k = rng.randint(1, 4)
            c = p.charge(k)
            q = reduced_phase(c)
            assert q.dir == p.dir
            assert (p.shift - q.shift) % 2 == 0


class TestPhaseOrder:
    def test_examples(self):
        assert phase_cmp(Phase((0, 1), 0), Phase((-1, 0), 0)) < 0
        p = Phase((2, 3), 1)
        assert phase_cmp(p, p) == 0
        assert phase_cmp(Phase((1, 1), 1), Phase((-1, 0), 0)) > 0

    def test_agrees_with_atan2(self, rng):
        pts = []
        for _ in range(300):
            x, y = rng.randint(-9, 9), rng.randint(-9, 9)
            if (x, y) == (0, 0):
                continue
            pts.append(reduced_phase(Charge(y, -x), extra_shift=rng.randint(-2, 2)))
        for p in pts:
            for q in pts:
                c = phase_cmp(p, q)
                fp, fq = p.approx(), q.approx()
                if abs(fp - fq) > 1e-12:
                    assert c == (-1 if fp < fq else 1)
                else:
                    assert c == 0

    @given(st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40), st.integers(-40, 40))
    def test_cross_sign_is_order_in_strip(self, x1, y1, x2, y2):
        if (x1, y1) == (0, 0) or (x2, y2) == (0, 0):
            return
        p = reduced_phase(Charge(y1, -x1))
        q = reduced_phase(Charge(y2, -x2))
        if p.shift != q.shift:
            return
        cr = p.dir[0] * q.dir[1] - p.dir[1] * q.dir[0]
        assert (cr > 0) == (phase_cmp(p, q) < 0)

    def test_from_value(self):
        assert Phase.from_value(Fraction(1, 2)) == Phase((0, 1), 0)
        assert Phase.from_value(Fraction(9, 4)) == Phase((1, 1), 2)
        assert Phase.from_value(1) == Phase((-1, 0), 0)
        assert Phase.from_value(0) == Phase((-1, 0), -1)
        with pytest.raises(DomainError):
            Phase.from_value(Fraction(1, 3))

    def test_bad_direction_rejected(self):
        with pytest.raises(DomainError):
            Phase((2, 2), 0)
        with pytest.raises(DomainError):
            Phase((0, -1), 0)


class TestEulerForm:
    def test_unit(self):
        assert euler_form(Charge(1, 0), Charge(0, 1)) == 1

    def test_antisymmetric(self):
        c = Charge(3, -7)
        assert euler_form(c, c) == 0

    def test_direct_value(self):
        assert euler_form(Charge(2, 3), Charge(1, 1)) == -1

    @given(charges, charges)
    def test_imaginary_part_of_hermitian_product(self, a, b):
        za, zb = central_charge(a), central_charge(b)
        # Im(conj(za) * zb)
        im = za.x * zb.y - za.y * zb.x
        assert euler_form(a, b) == im


class TestMass:
    def test_zero_iff_zero(self):
        assert mass_squared(Charge(0, 0)) == 0
        assert mass_squared(Charge(2, -3)) == 13


class TestSurdCut:
    def test_validation(self):
        with pytest.raises(DomainError):
            SurdCut(1, 1, 1, 4)  # square radicand
        with pytest.raises(DomainError):
            SurdCut(1, 0, 1, 2)  # rational
        with pytest.raises(DomainError):
            SurdCut(1, 1, 0, 2)  # bad denominator

    def test_sqrt2_vs_slope_one(self):
        cut = SurdCut(0, 1, 1, 2)
        p = reduced_phase(Charge(1, 1))
        # slope sqrt(2) > 1, phases increase with slope inside a strip
        assert cut_cmp(cut, p) == 1

    def test_sqrt2_below_torsion(self):
        cut = SurdCut(0, 1, 1, 2)
        assert cut_cmp(cut, reduced_phase(Charge(0, 1))) == -1

    def test_rational_cut_equality(self):
        cut = RationalCut(Phase((-1, 0), 0))
        assert cut_cmp(cut, reduced_phase(Charge(0, 7))) == 0

    def test_strips_dominate(self):
        cut = SurdCut(0, 1, 1, 2, strip=3)
        assert cut_cmp(cut, Phase((0, 1), 0)) == 1
        assert cut_cmp(cut, Phase((0, 1), 5)) == -1

    def test_against_mpmath_oracle(self):
        rng = random.Random(7)
        mpmath.mp.dps = 60
        for _ in range(1000):
            a = rng.randint(-9, 9)
            b = rng.choice([i for i in range(-5, 6) if i])
            c = rng.randint(1, 9)
            d = rng.choice([2, 3, 5, 6, 7, 10, 11, 13])
            strip = rng.randint(-2, 2)
            cut = SurdCut(a, b, c, d, strip)
            x, y = rng.randint(-9, 9), rng.randint(-9, 9)
            if (x, y) == (0, 0):
                continue
            p = reduced_phase(Charge(y, -x), extra_shift=rng.randint(-2, 2))
            val_cut = strip + 1 - mpmath.atan2(
                1, (a + b * mpmath.sqrt(d)) / c
            ) / mpmath.pi
            val_p = mpmath.atan2(p.dir[1], p.dir[0]) / mpmath.pi
            if val_p <= 0:
                val_p += 2
            val_p += p.shift
            expected = -1 if val_cut < val_p else 1
            assert cut_cmp(cut, p) == expected

    def test_surd_comparisons_transitive(self):
        cut = SurdCut(1, 1, 2, 5, strip=0)
        rng = random.Random(3)
        ps = []
        for _ in range(40):
            x, y = rng.randint(-6, 6), rng.randint(-6, 6)
            if (x, y) != (0, 0):
                ps.append(reduced_phase(Charge(y, -x)))
        below = [p for p in ps if cut_cmp(cut, p) == 1]
        above = [p for p in ps if cut_cmp(cut, p) == -1]
        for p in below:
            for q in above:
                assert phase_cmp(p, q) < 0

    def test_approx_matches_slope(self):
        cut = SurdCut(0, 1, 1, 2)
        r = cut.approx()
        assert 0 < r < 1
        assert -1 / math.tan(math.pi * r) == pytest.approx(math.sqrt(2))
