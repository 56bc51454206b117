"""Two-component degeneration: rank data per component and exact walls.

Charges carry the total degree and the two component ranks.  The central
charge family sends (deg, rk1, rk2) to -deg + i(a*rk1 + b*rk2) for
positive parameters (a, b).  Semistability of a declared object is tested
against its finite list of declared quotient classes by exact cross
product signs, and walls of marginal stability come out as integer linear
loci in (a, b).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .charges import DomainError


@dataclass(frozen=True)
class MultiCharge:
    deg: int
    rk1: int
    rk2: int

    def is_zero(self) -> bool:
        return self.deg == 0 and self.rk1 == 0 and self.rk2 == 0

    def __add__(self, other: "MultiCharge") -> "MultiCharge":
        return MultiCharge(
            self.deg + other.deg, self.rk1 + other.rk1, self.rk2 + other.rk2
        )


@dataclass(frozen=True)
class DeclaredObject:
    """A charge plus its declared nonzero proper quotient classes."""

    charge: MultiCharge
    quotients: tuple

    def __post_init__(self):
        for q in self.quotients:
            if q.is_zero() or q == self.charge:
                raise DomainError("quotients must be nonzero and proper")


def w_ab(c: MultiCharge, a, b):
    """Central charge (-deg, a*rk1 + b*rk2) at parameters a, b > 0."""
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise DomainError("parameters must be positive")
    return (Fraction(-c.deg), a * c.rk1 + b * c.rk2)


def _cross(u, v):
    return u[0] * v[1] - u[1] * v[0]

def is_semistable(obj: DeclaredObject, a, b) -> str:
    """"Stable", "StrictlySemistable" or "Unstable" at (a, b).

    The object is stable when its phase is strictly below the phase of
    every declared quotient; a phase tie without any violation gives
    strict semistability.
    """
    if obj.charge.is_zero():
        raise DomainError("zero charge has no stability verdict")
    w = w_ab(obj.charge, a, b)
    tie = False
    for q in obj.quotients:
        s = _cross(w, w_ab(q, a, b))  # > 0 iff phase(q) > phase(obj)
        if s < 0:
            return "Unstable"
        if s == 0:
            tie = True
    return "StrictlySemistable" if tie else "Stable"


def walls(obj: DeclaredObject) -> list:
    """Marginal stability loci alpha*a + beta*b + gamma = 0 per quotient.

    Only walls meeting the open positive quadrant are kept.  Each wall
    notes on which sign of the form the object is destabilized.
    """
    out = []
    d, r1, r2 = obj.charge.deg, obj.charge.rk1, obj.charge.rk2
    for q in obj.quotients:
        # cross(W(obj), W(q)) = alpha*a + beta*b; negative values destabilize
        alpha = q.deg * r1 - d * q.rk1
        beta = q.deg * r2 - d * q.rk2
        gamma = 0
        if alpha == 0 and beta == 0:
            continue
        # the locus meets the open positive quadrant only for mixed signs
        if alpha * beta >= 0:
            continue
        out.append(
            {
                "quotient": q,
                "wall": (alpha, beta, gamma),
                "unstable_side": "-",  # alpha*a + beta*b < 0 destabilizes
            }
        )
    return out


def wall_scan(obj: DeclaredObject, step, a_max, b_max) -> list:
    """Row-major verdict grid over the open positive quadrant."""
    step = Fraction(step)
    if step <= 0 or Fraction(a_max) <= 0 or Fraction(b_max) <= 0:
        raise DomainError("step and bounds must be positive")
    rows = []
    b = Fraction(b_max)
    while b > 0:
        row = []
        a = step
        while a <= Fraction(a_max):
            row.append(is_semistable(obj, a, b))
            a += step
        rows.append(row)
        b -= step
    return rows


def example_bundle() -> DeclaredObject:
    """The rank (1,1) degree 2 bundle with its two declared quotients."""
    return DeclaredObject(
        MultiCharge(2, 1, 1),
        (MultiCharge(1, 1, 0), MultiCharge(3, 0, 1)),
    )
