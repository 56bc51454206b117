"""Formal objects: HN pieces with JH compositions over stable labels.

An object of the derived category is modeled by the data its filtration
exposes: a strictly phase-decreasing list of semistable pieces, each
carrying a multiset of stable composition factors and a perfect/extreme
flag.  On top of this sit the four-type classification, a sound (never
guessing) Hom rule engine, the spherical test with connecting words, and
the chained torsion-free constructions with many filtration steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import autoeq
from .charges import Charge, DomainError, Phase, reduced_phase


@dataclass(frozen=True)
class StableLabel:
    """A stable object at a fixed phase: the unique extreme one, or a
    perfect one tagged by an opaque smooth-point style identifier."""

    kind: str  # "extreme" or "smooth"
    ident: Optional[str] = None

    def __post_init__(self):
        if self.kind == "extreme":
            if self.ident is not None:
                raise DomainError("extreme label carries no identifier")
        elif self.kind == "smooth":
            if not self.ident:
                raise DomainError("smooth label requires an identifier")
        else:
            raise DomainError(f"unknown label kind {self.kind!r}")


EXTREME = StableLabel("extreme")


def smooth(ident: str) -> StableLabel:
    return StableLabel("smooth", ident)


@dataclass(frozen=True)
class JHComposition:
    """Composition series content: (label, multiplicity) with distinct labels."""

    entries: tuple

    def __post_init__(self):
        if not self.entries:
            raise DomainError("composition series must be nonempty")
        labels = [lab for lab, _ in self.entries]
        if len(set(labels)) != len(labels):
            raise DomainError("composition labels must be distinct")
        for _, count in self.entries:
            if not isinstance(count, int) or count < 1:
                raise DomainError("composition counts must be positive integers")

    def length(self) -> int:
        return sum(count for _, count in self.entries)

    def labels(self) -> set:
        return {lab for lab, _ in self.entries}

    def all_extreme(self) -> bool:
        return all(lab.kind == "extreme" for lab, _ in self.entries)


def jh(*entries) -> JHComposition:
    return JHComposition(tuple(entries))


@dataclass(frozen=True)
class SemistablePiece:
    phase: Phase
    jh: JHComposition
    perfect: bool

    def __post_init__(self):
        if not self.perfect and not self.jh.all_extreme():
            raise DomainError("a non-perfect piece has only extreme factors")
        if self.perfect and self.jh.all_extreme() and self.jh.length() == 1:
            raise DomainError("the extreme stable object is not perfect")

    def charge(self) -> Charge:
        return self.phase.charge(self.jh.length())


@dataclass(frozen=True)
class FormalObject:
    """HN data: strictly phase-decreasing pieces, optional indecomposability."""

    pieces: tuple
    indecomposable: Optional[bool] = None

    def __post_init__(self):
        for a, b in zip(self.pieces, self.pieces[1:]):
            if not a.phase > b.phase:
                raise DomainError("piece phases must strictly decrease")
        if self.indecomposable:
            if len(self.pieces) >= 2:
                if any(p.perfect for p in self.pieces):
                    raise DomainError(
                        "an indecomposable object with several pieces has "
                        "only non-perfect pieces"
                    )
            elif len(self.pieces) == 1:
                if len(self.pieces[0].jh.entries) != 1:
                    raise DomainError(
                        "an indecomposable semistable piece has one factor type"
                    )

    def is_semistable(self) -> bool:
        return len(self.pieces) == 1

    def is_perfect(self) -> bool:
        """All pieces perfect (the whole object is a perfect complex)."""
        return all(p.perfect for p in self.pieces)


def piece(phase: Phase, jhc: JHComposition, perfect: bool) -> SemistablePiece:
    return SemistablePiece(phase, jhc, perfect)


def stable_piece(phase: Phase, label: StableLabel) -> SemistablePiece:
    return SemistablePiece(phase, jh((label, 1)), label.kind == "smooth")


def total_charge(x: FormalObject) -> Charge:
    c = Charge(0, 0)
    for p in x.pieces:
        c = c + p.charge()
    return c


def phi_plus(x: FormalObject) -> Phase:
    if not x.pieces:
        raise DomainError("empty object has no phases")
    return x.pieces[0].phase


def phi_minus(x: FormalObject) -> Phase:
    if not x.pieces:
        raise DomainError("empty object has no phases")
    return x.pieces[-1].phase


def shift(x: FormalObject, n: int) -> FormalObject:
    return FormalObject(
        tuple(SemistablePiece(p.phase + n, p.jh, p.perfect) for p in x.pieces),
        x.indecomposable,
    )


def classify_type(x: FormalObject) -> str:
    """One of "I", "II", "III", "IV" for a flagged indecomposable object."""
    if not x.indecomposable:
        raise DomainError("classification applies to indecomposable objects")
    if len(x.pieces) != 1:
        return "IV"
    p = x.pieces[0]
    if any(lab.kind == "smooth" for lab in p.jh.labels()):
        return "I"
    if p.perfect:
        return "II"
    return "III"


@dataclass(frozen=True)
class Verdict:
    kind: str  # "zero", "nonzero", "unknown"
    rule: Optional[str] = None


def _is_stable(x: FormalObject) -> bool:
    return len(x.pieces) == 1 and x.pieces[0].jh.length() == 1


def _single_label(x: FormalObject):
    if len(x.pieces) == 1 and len(x.pieces[0].jh.entries) == 1:
        return x.pieces[0].jh.entries[0][0]
    return None


def _is_type_one(x: FormalObject) -> bool:
    return len(x.pieces) == 1 and any(
        lab.kind == "smooth" for lab in x.pieces[0].jh.labels()
    )


def _direct_rules(x: FormalObject, y: FormalObject) -> list:
    """All applicable phase/stability rules for Hom(x, y), without Serre."""
    out = []
    lo, hi = phi_minus(x), phi_plus(y)
    if lo > hi:
        out.append(Verdict("zero", "hn-phase-gap"))
    if lo < hi < lo + 1:
        out.append(Verdict("nonzero", "open-phase-window"))
    if lo == hi:
        if _is_stable(x) and _is_stable(y):
            lx = x.pieces[0].jh.entries[0][0]
            ly = y.pieces[0].jh.entries[0][0]
            if lx == ly:
                out.append(Verdict("nonzero", "equal-phase-stable-identity"))
            else:
                out.append(Verdict("zero", "equal-phase-stable-orthogonal"))
        if x.indecomposable and y.indecomposable:
            if not _is_type_one(x) and not _is_type_one(y):
                out.append(Verdict("nonzero", "equal-phase-indecomposable-extreme"))
            lx, ly = _single_label(x), _single_label(y)
            if lx is not None and lx == ly:
                out.append(Verdict("nonzero", "equal-phase-isotypic"))
    return out


def applicable_rules(x: FormalObject, y: FormalObject, serre: bool = True) -> list:
    out = list(_direct_rules(x, y))
    if serre and (x.is_perfect() or y.is_perfect()):
        # Duality pairs Hom(x, y) with Hom(y, x[1]) when one side is perfect.
        for v in _direct_rules(y, shift(x, 1)):
            out.append(Verdict(v.kind, f"serre-dual:{v.rule}"))
    return out


def hom_verdict(x: FormalObject, y: FormalObject) -> Verdict:
    """Decide Hom(x, y) = 0 or not, or report Unknown; never guesses."""
    if not x.pieces or not y.pieces:
        raise DomainError("hom verdict needs nonempty objects")
    rules = applicable_rules(x, y)
    if rules:
        return rules[0]
    return Verdict("unknown")


def is_spherical(x: FormalObject) -> tuple[bool, str]:
    if len(x.pieces) != 1:
        return False, "not semistable"
    p = x.pieces[0]
    if p.jh.length() != 1:
        return False, "not stable"
    label = p.jh.entries[0][0]
    if label.kind == "extreme":
        return False, "extreme: two-dimensional self-extensions in every positive degree"
    return True, "perfect and stable"


def spherical_connect(s1: FormalObject, s2: FormalObject):
    """Generator word (and optional relabeling) carrying one spherical object
    to the charge, phase and label data of another."""
    for s in (s1, s2):
        ok, reason = is_spherical(s)
        if not ok:
            raise DomainError(f"spherical connect needs spherical input ({reason})")
    p1, p2 = s1.pieces[0].phase, s2.pieces[0].phase
    id1 = s1.pieces[0].jh.entries[0][0].ident
    id2 = s2.pieces[0].jh.entries[0][0].ident
    w1 = autoeq.map_phase_to_one(p1)
    w2 = autoeq.map_phase_to_one(p2)
    word = w1 + autoeq.invert_word(w2)
    relabel = None if id1 == id2 else (id1, id2)
    return word, relabel


def ext_dims_extreme(i: int) -> int:
    """dim Ext^i of the extreme stable torsion object against itself."""
    if i < 0:
        return 0
    if i == 0:
        return 1
    return 2


def sd_charge(d) -> Charge:
    """Charge of the chain-curve pushforward with twisting vector d."""
    d = list(d)
    if not d:
        raise DomainError("twisting vector must be nonempty")
    return Charge(len(d), 1 + sum(d))


def _plus(d: tuple) -> tuple:
    return d[:-1] + (d[-1] + 1,)


def default_d_of(slope: Fraction):
    """Twisting vector (d-1, 0, ..., 0) for primitive slope d/r.

    Warning: stability of the resulting sheaf is unverified; this supplier
    only matches the required charge.
    """
    slope = Fraction(slope)
    r, d = slope.denominator, slope.numerator
    return (d - 1,) + (0,) * (r - 1)


def sd_chain(slopes, d_of=None) -> tuple:
    """Concatenated twisting vector and HN ledger for increasing slopes in (0,1).

    Each slope contributes the extreme stable charge (r, d) of its reduced
    fraction d/r; the vectors chain by incrementing the last entry of the
    part already built, so the total charge telescopes.
    """
    slopes = [Fraction(s) for s in slopes]
    if not slopes:
        raise DomainError("need at least one slope")
    for s in slopes:
        if not (0 < s < 1):
            raise DomainError("slopes must lie strictly between 0 and 1")
    for a, b in zip(slopes, slopes[1:]):
        if not a < b:
            raise DomainError("slopes must strictly increase")
    if d_of is None:
        d_of = default_d_of
    vectors = []
    for s in slopes:
        v = tuple(d_of(s))
        c = sd_charge(v)
        prim = Charge(s.denominator, s.numerator)
        if c.rk <= 0 or c.rk % prim.rk != 0 or c != (c.rk // prim.rk) * prim:
            raise DomainError(f"twisting vector for slope {s} has the wrong charge")
        vectors.append(v)
    d0 = vectors[-1]
    for v in reversed(vectors[:-1]):
        d0 = _plus(d0) + v
    pieces = []
    for s, v in reversed(list(zip(slopes, vectors))):
        c = sd_charge(v)
        count = c.rk // s.denominator
        pieces.append(
            SemistablePiece(reduced_phase(c), jh((EXTREME, count)), perfect=False)
        )
    ledger = FormalObject(tuple(pieces), indecomposable=True)
    return d0, ledger


def catalog() -> dict:
    """Named worked objects used throughout the tests and the CLI."""
    half = Phase((0, 1), 0)
    one = Phase((-1, 0), 0)
    quarter = Phase((1, 1), 0)
    three_quarter = Phase((-1, 1), 0)
    objs = {
        "structure-sheaf": FormalObject(
            (stable_piece(half, smooth("p0")),), indecomposable=True
        ),
        "smooth-point": FormalObject(
            (stable_piece(one, smooth("x")),), indecomposable=True
        ),
        "singular-point": FormalObject(
            (stable_piece(one, EXTREME),), indecomposable=True
        ),
        "zero-class-complex": FormalObject(
            (stable_piece(one + 1, EXTREME), stable_piece(one, EXTREME)),
            indecomposable=False,
        ),
        "etale-rank-two": FormalObject(
            (
                stable_piece(three_quarter, EXTREME),
                stable_piece(quarter, EXTREME),
            ),
            indecomposable=True,
        ),
        "band": FormalObject(
            (SemistablePiece(one, jh((EXTREME, 2)), perfect=True),),
            indecomposable=True,
        ),
        # Shadow archetypes: the five shapes a shadow can take.
        "torsion-multiple": FormalObject(
            (SemistablePiece(one, jh((smooth("x"), 2)), perfect=True),),
            indecomposable=True,
        ),
        "shifted-semistable-bundle": FormalObject(
            (stable_piece(Phase((-1, 2), -1), smooth("y")),),
            indecomposable=True,
        ),
        "three-step-complex": FormalObject(
            (
                stable_piece(Phase((1, 2), 2), EXTREME),
                stable_piece(Phase((-1, 1), 1), EXTREME),
                stable_piece(Phase((1, 1), 1), EXTREME),
            ),
            indecomposable=True,
        ),
        "unstable-torsion-free": FormalObject(
            (
                stable_piece(Phase((-1, 2), 0), EXTREME),
                stable_piece(Phase((1, 2), 0), EXTREME),
            ),
            indecomposable=True,
        ),
        "semistable-band": FormalObject(
            (SemistablePiece(half, jh((EXTREME, 2)), perfect=True),),
            indecomposable=True,
        ),
    }
    return objs


CATALOG_NOTES = {
    "etale-rank-two": "perfect as a whole object although every piece is extreme",
    "band": "perfect semistable with extreme factors; not stable",
}


def transform(x: FormalObject, word) -> FormalObject:
    """Apply a generator word: phases through the exact lift, labels fixed."""
    pieces = tuple(
        SemistablePiece(autoeq.apply_to_phase(word, p.phase), p.jh, p.perfect)
        for p in x.pieces
    )
    return FormalObject(pieces, x.indecomposable)
