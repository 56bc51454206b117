"""Shared random generators for the property suites."""

import random

import pytest

from hnlab import autoeq
from hnlab.charges import Charge, Phase, reduced_phase
from hnlab.objects import (
    EXTREME,
    FormalObject,
    JHComposition,
    SemistablePiece,
    smooth,
)


def random_charge(rng, span=9, nonzero=True):
    while True:
        c = Charge(rng.randint(-span, span), rng.randint(-span, span))
        if not (nonzero and c.is_zero()):
            return c


def random_phase(rng, span=6, shifts=2):
    c = random_charge(rng, span)
    return reduced_phase(c, extra_shift=rng.randint(-shifts, shifts))


def random_word(rng, max_len=8):
    return [rng.choice(autoeq.LETTERS) for _ in range(rng.randint(0, max_len))]


def random_jh(rng, force_extreme=False):
    entries = []
    labels = [EXTREME] + [smooth(t) for t in ("x", "y", "z")]
    if force_extreme:
        pool = [EXTREME]
    else:
        pool = labels
    chosen = rng.sample(pool, rng.randint(1, min(2, len(pool))))
    for lab in chosen:
        entries.append((lab, rng.randint(1, 3)))
    return JHComposition(tuple(entries))


def random_piece(rng, phase, force_extreme=False):
    jh = random_jh(rng, force_extreme)
    all_ext = jh.all_extreme()
    if not all_ext:
        perfect = True
    elif jh.length() == 1:
        perfect = False
    else:
        perfect = rng.random() < 0.5
    return SemistablePiece(phase, jh, perfect)


def random_object(rng, max_pieces=3):
    n = rng.randint(1, max_pieces)
    phases = []
    seen = set()
    while len(phases) < n:
        p = random_phase(rng)
        key = (p.dir, p.shift)
        if key not in seen:
            seen.add(key)
            phases.append(p)
    phases.sort(key=lambda p: (p.shift, p.approx()), reverse=True)
    indec = rng.random() < 0.5
    if indec and n >= 2:
        pieces = tuple(
            SemistablePiece(
                p, JHComposition(((EXTREME, rng.randint(1, 3)),)), False
            )
            for p in phases
        )
    elif indec:
        lab = rng.choice([EXTREME, smooth("x"), smooth("y")])
        count = rng.randint(1, 3)
        perfect = lab.kind == "smooth" or (count > 1 and rng.random() < 0.5)
        pieces = (
            SemistablePiece(phases[0], JHComposition(((lab, count),)), perfect),
        )
    else:
        pieces = tuple(random_piece(rng, p) for p in phases)
    return FormalObject(pieces, indec)


@pytest.fixture
def rng():
    return random.Random(20240817)
