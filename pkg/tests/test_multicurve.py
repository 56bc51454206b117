from fractions import Fraction

import pytest

from hnlab.charges import DomainError
from hnlab.multicurve import (
    DeclaredObject,
    MultiCharge,
    example_bundle,
    is_semistable,
    w_ab,
    wall_scan,
    walls,
)


class TestCharge:
    def test_addition(self):
        assert MultiCharge(1, 2, 3) + MultiCharge(4, 5, 6) == MultiCharge(5, 7, 9)

    def test_central_charge_linear(self):
        a, b = Fraction(2), Fraction(3)
        u, v = MultiCharge(1, 1, 0), MultiCharge(0, 2, 1)
        wu, wv = w_ab(u, a, b), w_ab(v, a, b)
        ws = w_ab(u + v, a, b)
        assert ws == (wu[0] + wv[0], wu[1] + wv[1])

    def test_positive_parameters_required(self):
        with pytest.raises(DomainError):
            w_ab(MultiCharge(1, 1, 1), 0, 1)
        with pytest.raises(DomainError):
            w_ab(MultiCharge(1, 1, 1), 1, -2)

    def test_quotient_validation(self):
        with pytest.raises(DomainError):
            DeclaredObject(MultiCharge(1, 1, 1), (MultiCharge(0, 0, 0),))
        with pytest.raises(DomainError):
            DeclaredObject(MultiCharge(1, 1, 1), (MultiCharge(1, 1, 1),))


class TestVerdicts:
    def test_three_regions(self):
        obj = example_bundle()
        assert is_semistable(obj, 1, 2) == "Stable"
        assert is_semistable(obj, 1, 1) == "StrictlySemistable"
        assert is_semistable(obj, 2, 1) == "Unstable"

    def test_fractional_parameters(self):
        obj = example_bundle()
        assert is_semistable(obj, Fraction(99, 100), 1) == "Stable"
        assert is_semistable(obj, Fraction(101, 100), 1) == "Unstable"

    def test_zero_charge_rejected(self):
        bad = DeclaredObject(MultiCharge(0, 0, 0), ())
        with pytest.raises(DomainError):
            is_semistable(bad, 1, 1)

    def test_no_quotients_always_stable(self):
        obj = DeclaredObject(MultiCharge(5, 2, 3), ())
        assert is_semistable(obj, 7, Fraction(1, 3)) == "Stable"


class TestWalls:
    def test_example_has_one_wall(self):
        ws = walls(example_bundle())
        assert len(ws) == 1
        w = ws[0]
        assert w["quotient"] == MultiCharge(1, 1, 0)
        assert w["wall"] == (-1, 1, 0)
        assert w["unstable_side"] == "-"

    def test_wall_separates_verdicts(self):
        # on the wall -a + b = 0 the verdict is the tie, and each open side
        # matches the recorded unstable side
        obj = example_bundle()
        alpha, beta, _ = walls(obj)[0]["wall"]
        for a, b in [(1, 2), (1, 1), (2, 1), (3, 5), (5, 3)]:
            form = alpha * a + beta * b
            v = is_semistable(obj, a, b)
            if form < 0:
                assert v == "Unstable"
            elif form == 0:
                assert v == "StrictlySemistable"
            else:
                assert v == "Stable"

    def test_same_sign_quotient_gives_no_wall(self):
        obj = DeclaredObject(MultiCharge(2, 1, 1), (MultiCharge(3, 0, 1),))
        assert walls(obj) == []

    def test_proportional_quotient_gives_no_wall(self):
        obj = DeclaredObject(MultiCharge(2, 1, 1), (MultiCharge(4, 2, 2),))
        assert walls(obj) == []


class TestScan:
    def test_grid_shape_and_order(self):
        obj = example_bundle()
        grid = wall_scan(obj, 1, 3, 2)
        assert len(grid) == 2 and all(len(r) == 3 for r in grid)
        # top row is the largest b; the first column the smallest a
        assert grid[0] == [
            is_semistable(obj, 1, 2),
            is_semistable(obj, 2, 2),
            is_semistable(obj, 3, 2),
        ]
        assert grid[1][0] == is_semistable(obj, 1, 1)

    def test_fractional_step(self):
        obj = example_bundle()
        grid = wall_scan(obj, Fraction(1, 2), 1, 1)
        assert len(grid) == 2 and len(grid[0]) == 2
        assert grid[1][0] == is_semistable(obj, Fraction(1, 2), Fraction(1, 2))

    def test_deterministic(self):
        obj = example_bundle()
        assert wall_scan(obj, 1, 4, 4) == wall_scan(obj, 1, 4, 4)

    def test_consistent_with_wall(self):
        obj = example_bundle()
        alpha, beta, _ = walls(obj)[0]["wall"]
        step = Fraction(1, 3)
        grid = wall_scan(obj, step, 2, 2)
        b = Fraction(2)
        for row in grid:
            a = step
            for v in row:
                form = alpha * a + beta * b
                if form < 0:
                    assert v == "Unstable"
                elif form == 0:
                    assert v == "StrictlySemistable"
                else:
                    assert v == "Stable"
                a += step
            b -= step

    def test_rejects_bad_bounds(self):
        with pytest.raises(DomainError):
            wall_scan(example_bundle(), 0, 1, 1)
        with pytest.raises(DomainError):
            wall_scan(example_bundle(), 1, -1, 1)

    def test_no_floats_anywhere(self):
        grid = wall_scan(example_bundle(), Fraction(1, 7), 1, 1)
        assert all(isinstance(v, str) for row in grid for v in row)
        w = w_ab(MultiCharge(3, 1, 2), Fraction(1, 3), Fraction(2, 5))
        assert all(isinstance(x, Fraction) for x in w)
