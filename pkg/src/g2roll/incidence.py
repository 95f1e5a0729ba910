"""Points and lines of the projective lightcone.

A point is a 1d null subspace ``<x>`` of the imaginary split octonions (or
of the imaginary bioctonions, when the coordinates are Gaussian rationals),
stored as its representative whose first nonzero coordinate is 1.  A line is
a 2d null subalgebra, stored as a reduced row-echelon basis so that equal
lines compare equal.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .algebra import BASIS, Q, Vec7, cross, dot, imag_mul, lincomb, vzero
from .errors import NotCanonical, NotCollinear, NotNull, NotTwoRolls, ZeroVector
from .linalg import nullspace, rank, rref
from .scalars import Rat


class OrbitClass(str, enum.Enum):
    X0 = "X0"
    X1 = "X1"
    X2 = "X2"
    X3 = "X3"

    @property
    def index(self) -> int:
        return int(self.value[1])


def _first_nonzero(v: Sequence):
    for c in v:
        if c != 0:
            return c
    return None


@dataclass(frozen=True)
class PCPoint:
    rep: Vec7

    def __post_init__(self):
        rep = tuple(self.rep)
        if len(rep) != 7:
            raise ValueError("a point needs a 7-vector representative")
        object.__setattr__(self, "rep", rep)
        lead = _first_nonzero(rep)
        if lead is None:
            raise ZeroVector("the zero vector spans no point")
        if Q(rep) != 0:
            raise NotNull("representative is not null", q=str(Q(rep)))
        if lead != 1:
            raise NotCanonical("first nonzero coordinate must be 1; use point_from_vector")


def point_from_vector(x: Sequence) -> PCPoint:
    """The point ``<x>``, rescaled so the first nonzero coordinate is 1."""
    x = tuple(x)
    lead = _first_nonzero(x)
    if lead is None:
        raise ZeroVector("the zero vector spans no point")
    q = Q(x)
    if q != 0:
        raise NotNull(f"Q(x) = {q} is nonzero")
    inv = Rat(1) / lead
    return PCPoint(tuple(c * inv for c in x))


def _vec(p) -> Vec7:
    return p.rep if isinstance(p, PCPoint) else tuple(p)


@dataclass(frozen=True)
class LineSubalgebra:
    basis: Tuple[Vec7, Vec7]

    def __post_init__(self):
        b = [tuple(v) for v in self.basis]
        if len(b) != 2 or rank(b) != 2:
            raise ValueError("a line needs two independent vectors")
        red, _ = rref(b)
        b = tuple(tuple(r) for r in red)
        for u in b:
            for v in b:
                if dot(u, v) != 0 or not imag_mul(u, v).is_zero():
                    raise NotCollinear("span is not a null subalgebra")
        object.__setattr__(self, "basis", b)

    def contains(self, p) -> bool:
        v = _vec(p)
        return rank(list(self.basis) + [v]) == 2

    def point(self, s, t) -> PCPoint:
        return point_from_vector(lincomb((s, t), self.basis))


def annihilator(x) -> List[Vec7]:
    """Basis of ``{y in I : y x = 0}``; three vectors for a nonzero null ``x``."""
    xv = _vec(x)
    cols = [imag_mul(e, xv).coefficients() for e in BASIS]
    rows = [list(r) for r in zip(*cols)]
    return [tuple(v) for v in nullspace(rows, 7)]


def joint_annihilator(x, z) -> List[Vec7]:
    """Basis of ``{y in I : x y = 0 and z y = 0}``."""
    xv, zv = _vec(x), _vec(z)
    rows = []
    for w in (xv, zv):
        cols = [imag_mul(w, e).coefficients() for e in BASIS]
        rows.extend(list(r) for r in zip(*cols))
    return [tuple(v) for v in nullspace(rows, 7)]


def roll_distance(a, b) -> int:
    x, y = _vec(a), _vec(b)
    if point_from_vector(x) == point_from_vector(y):
        return 0
    if vzero(cross(x, y)):
        return 1
    if dot(x, y) == 0:
        return 2
    return 3


def classify_pair(a, b) -> OrbitClass:
    return OrbitClass(f"X{roll_distance(a, b)}")


def line_through(a, b) -> LineSubalgebra:
    d = roll_distance(a, b)
    if d == 0:
        raise NotCollinear("a single point does not determine a line")
    if d > 1:
        raise NotCollinear(f"points are {d} rolls apart", distance=d)
    return LineSubalgebra((_vec(a), _vec(b)))


def midpoint(a, c) -> PCPoint:
    """The unique point one roll from both ``a`` and ``c`` (two rolls apart)."""
    d = roll_distance(a, c)
    if d != 2:
        raise NotTwoRolls(f"points are {d} rolls apart, not 2", distance=d)
    x, z = _vec(a), _vec(c)
    m = cross(x, z)
    kernel = joint_annihilator(x, z)
    if len(kernel) != 1 or rank(kernel + [m]) != 1:
        raise ArithmeticError("joint annihilator is not spanned by x cross z")
    return point_from_vector(m)


def connecting_chain(a, b) -> List[PCPoint]:
    """Shortest chain of points from ``a`` to ``b``, consecutive ones collinear."""
    pa, pb = point_from_vector(_vec(a)), point_from_vector(_vec(b))
    d = roll_distance(pa, pb)
    if d == 0:
        return [pa]
    if d == 1:
        return [pa, pb]
    if d == 2:
        return [pa, midpoint(pa, pb), pb]
    # a point of Ann_x orthogonal to z is one roll from x and two from z
    ann = annihilator(pa)
    row = [[dot(v, pb.rep) for v in ann]]
    coeffs = nullspace(row, 3)[0]
    y = point_from_vector(lincomb(coeffs, ann))
    return [pa, y, midpoint(y, pb), pb]
