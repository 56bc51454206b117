"""Exact arithmetic for K-group charges, phases, slopes and phase cuts.

Everything in this module is integer/rational arithmetic; there is no
floating point anywhere in the public API.  A charge is a pair
(rank, degree) in Z^2, its central charge is the Gaussian integer
Z = -deg + i*rk, and its phase is arg(Z)/pi lifted to the real line.
Phases are stored exactly as a primitive lattice direction in the closed
upper half-plane sector together with an integer strip shift.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class DomainError(ValueError):
    """Raised when an operation is applied outside its domain."""


# The canonical sector S = {y > 0} u {y = 0, x < 0}.  Directions in S have
# phase value in (0, 1]: (0,1) is 1/2, (-1,0) is 1.


def _gcd(a: int, b: int) -> int:
    return math.gcd(abs(a), abs(b))


def cross(u: tuple[int, int], v: tuple[int, int]):
    return u[0] * v[1] - u[1] * v[0]


def dot(u: tuple[int, int], v: tuple[int, int]):
    return u[0] * v[0] + u[1] * v[1]


def in_sector(v: tuple[int, int]) -> bool:
    x, y = v
    return y > 0 or (y == 0 and x < 0)


def normalize_direction(v) -> tuple[tuple[int, int], bool]:
    """Scale a nonzero rational vector to a primitive integer direction in S.

    Returns (direction, flipped); flipped is True when the input pointed
    into the complement of S, so the sign had to be reversed (which lowers
    the represented phase by one).
    """
    x, y = v
    if x == 0 and y == 0:
        raise DomainError("zero vector has no direction")
    if isinstance(x, Fraction) or isinstance(y, Fraction):
        x, y = Fraction(x), Fraction(y)
        den = x.denominator * y.denominator // math.gcd(x.denominator, y.denominator)
        x, y = int(x * den), int(y * den)
    g = _gcd(x, y)
    x, y = x // g, y // g
    if in_sector((x, y)):
        return (x, y), False
    return (-x, -y), True


@dataclass(frozen=True)
class Charge:
    """Class in the Grothendieck group, recorded as (rank, degree)."""

    rk: int
    deg: int

    def __add__(self, other: "Charge") -> "Charge":
        return Charge(self.rk + other.rk, self.deg + other.deg)

    def __sub__(self, other: "Charge") -> "Charge":
        return Charge(self.rk - other.rk, self.deg - other.deg)

    def __neg__(self) -> "Charge":
        return Charge(-self.rk, -self.deg)

    def __mul__(self, n: int) -> "Charge":
        return Charge(n * self.rk, n * self.deg)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return self.rk == 0 and self.deg == 0

    def plane_vector(self) -> "PlaneVector":
        return PlaneVector(-self.deg, self.rk)

    def is_primitive(self) -> bool:
        return _gcd(self.rk, self.deg) == 1


@dataclass(frozen=True)
class PlaneVector:
    """Central charge Z = -deg + i*rk as an integer point (x, y) = (Re, Im)."""

    x: int
    y: int

    def charge(self) -> Charge:
        return Charge(self.y, -self.x)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0


def central_charge(c: Charge) -> PlaneVector:
    return PlaneVector(-c.deg, c.rk)


def slope(c: Charge) -> Union[Fraction, float]:
    """Slope deg/rk; math.inf for nonzero torsion classes."""
    if c.is_zero():
        raise DomainError("slope undefined on zero class")
    if c.rk == 0:
        return math.inf
    return Fraction(c.deg, c.rk)


def mass_squared(c: Charge) -> int:
    """Squared length of the central charge; zero iff the charge is zero."""
    return c.rk * c.rk + c.deg * c.deg


def euler_form(a: Charge, b: Charge) -> int:
    """Antisymmetric pairing rk(a)deg(b) - deg(a)rk(b)."""
    return a.rk * b.deg - a.deg * b.rk


@dataclass(frozen=True, order=False)
class Phase:
    """Exact phase: primitive direction in S plus an integer strip shift.

    The represented real value is reduced(dir) + shift with reduced in
    (0, 1].  Comparison is by shift first, then by the sign of the cross
    product of directions (positive cross means smaller phase).
    """

    dir: tuple[int, int]
    shift: int = 0

    def __post_init__(self):
        x, y = self.dir
        if _gcd(x, y) != 1:
            raise DomainError(f"direction {self.dir} is not primitive")
        if not in_sector(self.dir):
            raise DomainError(f"direction {self.dir} outside canonical sector")

    def charge(self, length: int = 1) -> Charge:
        """Charge of a semistable class of this phase and JH length."""
        base = Charge(self.dir[1], -self.dir[0])
        if self.shift % 2 != 0:
            base = -base
        return length * base

    def __add__(self, n: int) -> "Phase":
        return Phase(self.dir, self.shift + n)

    def __sub__(self, n: int) -> "Phase":
        return Phase(self.dir, self.shift - n)

    def approx(self) -> float:
        """Floating approximation of the value; for display and test oracles only."""
        x, y = self.dir
        r = math.atan2(y, x) / math.pi
        if r <= 0.0:  # (-1, 0) maps to 1, not -1
            r += 2.0
        return r + self.shift

    def cmp(self, other: "Phase") -> int:
        if self.shift != other.shift:
            return -1 if self.shift < other.shift else 1
        c = cross(self.dir, other.dir)
        if c > 0:
            return -1
        if c < 0:
            return 1
        return 0

    def __lt__(self, other):
        return self.cmp(other) < 0

    def __le__(self, other):
        return self.cmp(other) <= 0

    def __gt__(self, other):
        return self.cmp(other) > 0

    def __ge__(self, other):
        return self.cmp(other) >= 0

    @staticmethod
    def from_value(v) -> "Phase":
        """Phase for an exactly representable rational value.

        Only values whose direction is a lattice ray are representable:
        v - shift must be one of 1/4, 1/2, 3/4 or 1.
        """
        v = Fraction(v)
        n = math.ceil(v) - 1
        r = v - n
        dirs = {
            Fraction(1, 4): (1, 1),
            Fraction(1, 2): (0, 1),
            Fraction(3, 4): (-1, 1),
            Fraction(1): (-1, 0),
        }
        if r not in dirs:
            raise DomainError(f"value {v} is not the phase of a lattice ray")
        return Phase(dirs[r], n)


def reduced_phase(c: Charge, extra_shift: int = 0) -> Phase:
    """Phase of a nonzero class, reduced into (-1, 1] plus an optional shift.

    Classes with Z in the sector S get shift 0 (value in (0, 1]); classes
    pointing into the lower half-plane get shift -1 (value in (-1, 0]).
    """
    if c.is_zero():
        raise DomainError("phase undefined on zero class")
    d, flipped = normalize_direction((-c.deg, c.rk))
    return Phase(d, extra_shift - (1 if flipped else 0))


def phase_cmp(p: Phase, q: Phase) -> int:
    """-1, 0 or 1; total order compatible with the real values."""
    return p.cmp(q)


def _cmp_surd_to_rational(a: int, b: int, c: int, D: int, t: Fraction) -> int:
    """Sign of (a + b*sqrt(D))/c - t for c > 0 and D a positive non-square."""
    # a + b*sqrt(D) vs c*t  <=>  b*sqrt(D) vs c*t - a
    u = c * t - a
    if b >= 0 and u < 0:
        return 1
    if b <= 0 and u > 0:
        return -1
    lhs = b * b * D
    rhs = u * u
    s = 1 if lhs > rhs else -1 if lhs < rhs else 0
    if b < 0:  # both sides non-positive: comparison reverses
        s = -s
    if s == 0:
        raise DomainError("surd slope is rational; D must be a non-square")
    return s


def _is_square(n: int) -> bool:
    if n < 0:
        return False
    r = math.isqrt(n)
    return r * r == n


@dataclass(frozen=True)
class RationalCut:
    """Phase cut at a lattice phase."""

    phase: Phase


@dataclass(frozen=True)
class SurdCut:
    """Irrational phase cut at slope (a + b*sqrt(D))/c placed in strip (strip, strip+1]."""

    a: int
    b: int
    c: int
    D: int
    strip: int = 0

    def __post_init__(self):
        if self.c <= 0:
            raise DomainError("surd cut denominator must be positive")
        if self.b == 0 or self.D <= 0 or _is_square(self.D):
            raise DomainError("surd cut slope must be irrational")

    def shifted(self, n: int) -> "SurdCut":
        return SurdCut(self.a, self.b, self.c, self.D, self.strip + n)

    def approx(self) -> float:
        """Floating value of the cut phase; test oracle only."""
        s = (self.a + self.b * math.sqrt(self.D)) / self.c
        r = 1 - math.atan2(1.0, s) / math.pi  # -cot(pi r) = s, r in (0, 1)
        return self.strip + r


PhaseCut = Union[RationalCut, SurdCut]


def cut_cmp(cut: PhaseCut, p: Phase) -> int:
    """Exact comparison of a cut's phase against a lattice phase.

    Returns -1 (cut below p), 0 (equal; rational cuts only) or 1.
    Within one strip the phase is a strictly increasing function of the
    slope, so a surd cut compares against deg/rk by a pure sign test.
    """
    if isinstance(cut, RationalCut):
        return cut.phase.cmp(p)
    # Cut value lies strictly inside (strip, strip + 1).
    if p.shift != cut.strip:
        return -1 if cut.strip < p.shift else 1
    x, y = p.dir
    if y == 0:  # torsion direction: maximal phase in the strip
        return -1
    mu = Fraction(-x, y)  # slope of the charge behind this direction
    return _cmp_surd_to_rational(cut.a, cut.b, cut.c, cut.D, mu)
