import json
from fractions import Fraction

import pytest

from hnlab import autoeq, serialize, stabcond, tstruct
from hnlab.charges import Charge, DomainError, Phase, RationalCut, SurdCut
from hnlab.multicurve import example_bundle
from hnlab.objects import catalog
from conftest import random_charge, random_object, random_phase, random_word


class TestRoundTrips:
    def test_charge(self, rng):
        for _ in range(50):
            c = random_charge(rng)
            data = json.loads(json.dumps(serialize.encode_charge(c)))
            assert serialize.decode_charge(data) == c

    def test_phase(self, rng):
        for _ in range(50):
            p = random_phase(rng)
            assert serialize.decode_phase(serialize.encode_phase(p)) == p

    def test_word(self, rng):
        for _ in range(50):
            w = random_word(rng)
            assert serialize.decode_word(serialize.encode_word(w)) == w

    def test_object(self, rng):
        for _ in range(100):
            x = random_object(rng)
            data = json.loads(json.dumps(serialize.encode_object(x)))
            assert serialize.decode_object(data) == x

    def test_catalog_objects(self):
        for x in catalog().values():
            assert serialize.decode_object(serialize.encode_object(x)) == x

    def test_cuts(self):
        cuts = [
            RationalCut(Phase((-1, 0), 0)),
            SurdCut(1, 1, 2, 5, strip=-1),
        ]
        for cut in cuts:
            assert serialize.decode_cut(serialize.encode_cut(cut)) == cut

    def test_tstructure(self):
        t = tstruct.TStructure(
            RationalCut(Phase((0, 1), 0)),
            tstruct.StableSubsetSpec(True, "only", frozenset({"x", "y"})),
        )
        assert serialize.decode_tstructure(serialize.encode_tstructure(t)) == t

    def test_autoeq(self, rng):
        for _ in range(50):
            g = autoeq.normal_form(random_word(rng))
            assert serialize.decode_autoeq(serialize.encode_autoeq(g)) == g

    def test_gl(self):
        g = stabcond.GLPlusTilde.from_matrix(
            [[Fraction(1, 2), Fraction(1, 3)], [0, Fraction(5, 7)]]
        )
        assert serialize.decode_gl(serialize.encode_gl(g)) == g

    def test_fraction(self):
        assert serialize.encode_fraction(Fraction(3, 4)) == "3/4"
        assert serialize.encode_fraction(Fraction(5)) == "5"
        assert serialize.decode_fraction("3/4") == Fraction(3, 4)

    def test_declared(self):
        obj = example_bundle()
        assert serialize.decode_declared(serialize.encode_declared(obj)) == obj


class TestValidation:
    def test_bad_charge(self):
        with pytest.raises(DomainError):
            serialize.decode_charge([1])
        with pytest.raises(DomainError):
            serialize.decode_charge({"rk": 1, "deg": 0})

    def test_bad_phase_direction(self):
        with pytest.raises(DomainError):
            serialize.decode_phase({"dir": [2, 2], "shift": 0})

    def test_bad_cut_kind(self):
        with pytest.raises(DomainError):
            serialize.decode_cut({"kind": "cubic"})

    def test_bad_jh_label(self):
        with pytest.raises(DomainError):
            serialize.decode_object(
                {"pieces": [{"phase": {"dir": [-1, 0]}, "jh": [["weird", 1]], "perfect": True}]}
            )

    def test_bad_fraction(self):
        with pytest.raises(DomainError):
            serialize.decode_fraction("1/0")
        with pytest.raises(DomainError):
            serialize.decode_fraction("x")
