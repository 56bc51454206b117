"""The family of t-structures: cut phase plus a subset of stables at the cut.

A t-structure is specified by a phase cut (lattice phase or quadratic surd)
and, at a lattice cut, the subset of stable labels pushed into the lower
aisle.  Membership, truncation triangles, the Noetherian test and explicit
witness chains for every non-Noetherian heart are all exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import autoeq
from .charges import (
    Charge,
    DomainError,
    PhaseCut,
    RationalCut,
    SurdCut,
    cross,
    cut_cmp,
    reduced_phase,
)
from .objects import FormalObject, JHComposition, SemistablePiece, StableLabel


@dataclass(frozen=True)
class StableSubsetSpec:
    """Decidable subset of the stable labels at one phase.

    The smooth part is one of: none, all, a finite id set, or the
    complement of a finite id set; the extreme stable is in or out by flag.
    """

    include_extreme: bool = False
    smooth_mode: str = "none"  # none | all | only | all-except
    smooth_ids: frozenset = frozenset()

    def __post_init__(self):
        if self.smooth_mode not in ("none", "all", "only", "all-except"):
            raise DomainError(f"unknown smooth mode {self.smooth_mode!r}")
        if self.smooth_mode in ("none", "all") and self.smooth_ids:
            raise DomainError("id set only allowed for only/all-except modes")

    def contains(self, label: StableLabel) -> bool:
        if label.kind == "extreme":
            return self.include_extreme
        if self.smooth_mode == "none":
            return False
        if self.smooth_mode == "all":
            return True
        if self.smooth_mode == "only":
            return label.ident in self.smooth_ids
        return label.ident not in self.smooth_ids

    def complement(self) -> "StableSubsetSpec":
        mode = {"none": "all", "all": "none", "only": "all-except", "all-except": "only"}
        return StableSubsetSpec(
            not self.include_extreme, mode[self.smooth_mode], self.smooth_ids
        )

    def is_empty(self) -> bool:
        if self.include_extreme:
            return False
        return self.smooth_mode == "none" or (
            self.smooth_mode == "only" and not self.smooth_ids
        )


EMPTY_SPEC = StableSubsetSpec()


@dataclass(frozen=True)
class TStructure:
    cut: PhaseCut
    minus: StableSubsetSpec = EMPTY_SPEC

    def __post_init__(self):
        if isinstance(self.cut, SurdCut) and not self.minus.is_empty():
            raise DomainError("no stable objects sit at an irrational cut")


def _cut_plus_one(cut: PhaseCut) -> PhaseCut:
    if isinstance(cut, RationalCut):
        return RationalCut(cut.phase + 1)
    return cut.shifted(1)


def _labels_in(piece: SemistablePiece, spec: StableSubsetSpec) -> bool:
    return all(spec.contains(lab) for lab, _ in piece.jh.entries)


def membership(t: TStructure, x: FormalObject) -> frozenset:
    """All memberships of x among lower aisle, upper aisle and heart."""
    plus = t.minus.complement()
    upper_cut = _cut_plus_one(t.cut)
    leq0 = geq1 = heart = True
    for p in x.pieces:
        rel = cut_cmp(t.cut, p.phase)
        rel_up = cut_cmp(upper_cut, p.phase)
        leq0 = leq0 and (rel < 0 or (rel == 0 and _labels_in(p, t.minus)))
        geq1 = geq1 and (rel > 0 or (rel == 0 and _labels_in(p, plus)))
        heart = heart and (
            (rel < 0 and rel_up > 0)
            or (rel == 0 and _labels_in(p, t.minus))
            or (rel_up == 0 and _labels_in(p, plus))
        )
    out = set()
    if leq0:
        out.add("aisle-leq0")
    if geq1:
        out.add("aisle-geq1")
    if heart:
        out.add("heart")
    return frozenset(out)


def _split_piece(p: SemistablePiece, spec: StableSubsetSpec):
    """Split a cut-phase piece into (entries in spec, entries outside).

    When a genuine split happens the side containing smooth factors stays
    perfect and the purely extreme side is emitted non-perfect; the model
    cannot certify band summands across a split.
    """
    inside = tuple(e for e in p.jh.entries if spec.contains(e[0]))
    outside = tuple(e for e in p.jh.entries if not spec.contains(e[0]))
    if not outside:
        return p, None
    if not inside:
        return None, p

    def side(entries):
        all_ext = all(lab.kind == "extreme" for lab, _ in entries)
        return SemistablePiece(p.phase, JHComposition(entries), not all_ext)

    return side(inside), side(outside)


def truncate(t: TStructure, x: FormalObject):
    """Triangle decomposition A -> x -> B with A in D^{<=0}, B in D^{>=1}."""
    a_pieces, b_pieces = [], []
    for p in x.pieces:
        rel = cut_cmp(t.cut, p.phase)
        if rel < 0:
            a_pieces.append(p)
        elif rel > 0:
            b_pieces.append(p)
        else:
            lo, hi = _split_piece(p, t.minus)
            if lo is not None:
                a_pieces.append(lo)
            if hi is not None:
                b_pieces.append(hi)
    return FormalObject(tuple(a_pieces)), FormalObject(tuple(b_pieces))


def is_noetherian(t: TStructure) -> bool:
    """The heart is Noetherian exactly at a lattice cut with nothing pushed down."""
    return isinstance(t.cut, RationalCut) and t.minus.is_empty()


def _surd_sign(a: int, b: int, d_rad: int) -> int:
    """Sign of a + b*sqrt(D) for non-square positive D."""
    if b == 0:
        return 0 if a == 0 else (1 if a > 0 else -1)
    if a >= 0 and b > 0:
        return 1
    if a <= 0 and b < 0:
        return -1
    s = 1 if a * a < b * b * d_rad else -1 if a * a > b * b * d_rad else 0
    if s == 0:
        raise DomainError("radicand must be a non-square")
    return s if b > 0 else -s


def _window_form(cut: SurdCut, v) -> tuple[int, int]:
    """(A, B) with sign(A + B*sqrt(D)) > 0 iff the plane vector v lies in the
    open half-plane of phases strictly between the cut and the cut plus one."""
    x, y = v
    sgn = 1 if cut.strip % 2 == 0 else -1
    return (-sgn * (cut.c * x + cut.a * y), -sgn * cut.b * y)


def _in_window(cut: SurdCut, v) -> bool:
    a, b = _window_form(cut, v)
    return _surd_sign(a, b, cut.D) > 0


def _window_vector(c: Charge, cut: SurdCut):
    w = (-c.deg, c.rk)
    if _in_window(cut, w):
        return w
    w = (c.deg, -c.rk)
    if _in_window(cut, w):
        return w
    raise DomainError("charge phase is not inside the open cut strip")


def _unimodular_partner(w, cut: SurdCut):
    """The unique plane vector f with cross(w, f) = 1 and both f and w - f
    inside the open window.  The window condition is linear, so the family
    f0 + t*w meets it in an open unit interval with irrational endpoints,
    which contains exactly one integer."""
    x, y = w
    g, u0, v0 = _ext_gcd(x, y)
    if g != 1:
        raise DomainError("unimodular partner needs a primitive class")
    # u0*x + v0*y = 1, so f0 = (-v0, u0) satisfies cross(w, f0) = 1
    f0 = (-v0, u0)
    aw, bw = _window_form(cut, w)
    af, bf = _window_form(cut, f0)
    # need sign((af + t*aw) + (bf + t*bw) sqrt(D)) > 0 and the same for w - f
    approx = -(af + bf * cut.D ** 0.5) / (aw + bw * cut.D ** 0.5)
    t = round(approx)
    for _ in range(4):
        lo_ok = _surd_sign(af + t * aw, bf + t * bw, cut.D) > 0
        hi_ok = _surd_sign(aw - af - t * aw, bw - bf - t * bw, cut.D) > 0
        if lo_ok and hi_ok:
            return (f0[0] + t * x, f0[1] + t * y)
        t += 1 if not lo_ok else -1
    raise DomainError("no unimodular partner found")


def _ext_gcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def epi_chain(e: Charge, cut: SurdCut, length: int) -> list:
    """Chain of charges, each pairing to 1 against the previous one, with all
    phases and all difference classes strictly inside the open cut strip."""
    if length < 1:
        raise DomainError("chain length must be positive")
    w = _window_vector(e, cut)
    chain = []
    for _ in range(length):
        f = _unimodular_partner(w, cut)
        chain.append(Charge(f[1], -f[0]))
        w = f
    return chain


def _pick_smooth_ident(spec: StableSubsetSpec):
    if spec.smooth_mode == "all":
        return "x"
    if spec.smooth_mode == "only":
        return sorted(spec.smooth_ids)[0] if spec.smooth_ids else None
    if spec.smooth_mode == "all-except":
        n = 0
        while True:
            cand = "x" if n == 0 else f"x{n}"
            if cand not in spec.smooth_ids:
                return cand
            n += 1
    return None


def non_noetherian_witness(t: TStructure, length: int) -> dict:
    """Explicit strictly ascending chain in the heart refuting Noetherianity.

    Lattice cut: after conjugating the cut phase to 1, degree steps of 1
    along a smooth point in the pushed-down set, or steps of 2 through the
    length-two torsion module when only the extreme stable is pushed down.
    Irrational cut: the lattice-strip chain seeded on the imaginary axis.
    """
    if is_noetherian(t):
        raise DomainError("heart is Noetherian; no witness exists")
    if length < 1:
        raise DomainError("witness length must be positive")
    if isinstance(t.cut, SurdCut):
        seed = (
            Charge(1, 0)
            if _in_window(t.cut, (0, 1))
            else Charge(-1, 0)
        )
        return {
            "kind": "strip-chain",
            "seed": seed,
            "charges": epi_chain(seed, t.cut, length),
        }
    word = autoeq.map_phase_to_one(t.cut.phase)
    ident = _pick_smooth_ident(t.minus)
    if ident is not None:
        return {
            "kind": "smooth-chain",
            "conjugation": word,
            "ident": ident,
            "charges": [Charge(1, m) for m in range(1, length + 1)],
            "cokernel": f"point object at {ident}, shifted down by one",
        }
    return {
        "kind": "extreme-chain",
        "conjugation": word,
        "charges": [Charge(1, 2 * m) for m in range(1, length + 1)],
        "cokernel": "length-two torsion module at the singular point",
    }
