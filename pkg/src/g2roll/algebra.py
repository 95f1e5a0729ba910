"""Quaternions, split octonions and their imaginary part.

Coefficients may be any field elements supporting ``+ - * /`` and ``== 0``:
``Rat`` (exact rationals) for the split octonions proper, ``GaussRational`` for the
bioctonions, plain ``float`` for the rolling-ball kinematics.

Imaginary split octonions are tuples of length 7 in the basis

    e1, e2, e3, e4, e5, e6, e7 = (i,0), (j,0), (k,0), (0,1), (0,i), (0,j), (0,k)

on which the dot product is ``diag(1, 1, 1, -1, -1, -1, -1)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence, Tuple

from .scalars import Rat

Vec7 = Tuple[Any, ...]

SIGNATURE = (1, 1, 1, -1, -1, -1, -1)
HALF = Rat(1, 2)


@dataclass(frozen=True)
class Quaternion:
    a: Any = 0
    b: Any = 0
    c: Any = 0
    d: Any = 0

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    def __add__(self, o: "Quaternion") -> "Quaternion":
        return Quaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Quaternion") -> "Quaternion":
        return Quaternion(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, o):
        if isinstance(o, Quaternion):
            return quat_mul(self, o)
        return Quaternion(self.a * o, self.b * o, self.c * o, self.d * o)

    def __rmul__(self, s):
        return Quaternion(s * self.a, s * self.b, s * self.c, s * self.d)

    def conj(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm2(self):
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def dot(self, o: "Quaternion"):
        """Real part of ``conj(self) * o``."""
        return self.a * o.a + self.b * o.b + self.c * o.c + self.d * o.d

    def imag(self) -> Tuple[Any, Any, Any]:
        return (self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    @staticmethod
    def pure(v: Sequence) -> "Quaternion":
        """Imaginary quaternion from a 3-vector."""
        return Quaternion(0 * v[0], v[0], v[1], v[2])


def quat_mul(x: Quaternion, y: Quaternion) -> Quaternion:
    """Hamilton product."""
    a1, b1, c1, d1 = x.a, x.b, x.c, x.d
    a2, b2, c2, d2 = y.a, y.b, y.c, y.d
    return Quaternion(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


@dataclass(frozen=True)
class SplitOctonion:
    """The pair ``(first, second)`` in H + H."""

    first: Quaternion
    second: Quaternion

    def __add__(self, o: "SplitOctonion") -> "SplitOctonion":
        return SplitOctonion(self.first + o.first, self.second + o.second)

    def __sub__(self, o: "SplitOctonion") -> "SplitOctonion":
        return SplitOctonion(self.first - o.first, self.second - o.second)

    def __neg__(self) -> "SplitOctonion":
        return SplitOctonion(-self.first, -self.second)

    def __mul__(self, o):
        if isinstance(o, SplitOctonion):
            return oct_mul(self, o)
        return SplitOctonion(self.first * o, self.second * o)

    def __rmul__(self, s):
        return SplitOctonion(s * self.first, s * self.second)

    def coefficients(self) -> Tuple[Any, ...]:
        return tuple(self.first) + tuple(self.second)

    @staticmethod
    def from_coefficients(cs: Sequence) -> "SplitOctonion":
        if len(cs) != 8:
            raise ValueError(f"split octonion needs 8 coefficients, got {len(cs)}")
        return SplitOctonion(Quaternion(*cs[:4]), Quaternion(*cs[4:]))

    def real(self):
        return self.first.a

    def is_zero(self) -> bool:
        return self.first.is_zero() and self.second.is_zero()


def oct_mul(x: SplitOctonion, y: SplitOctonion) -> SplitOctonion:
    """``(a, b)(c, d) = (ac + d conj(b), conj(a) d + cb)``."""
    a, b = x.first, x.second
    c, d = y.first, y.second
    return SplitOctonion(a * c + d * b.conj(), a.conj() * d + c * b)


def oct_conj(x: SplitOctonion) -> SplitOctonion:
    return SplitOctonion(x.first.conj(), -x.second)


def quadratic_form(x: SplitOctonion):
    return x.first.norm2() - x.second.norm2()


def oct_dot(x: SplitOctonion, y: SplitOctonion):
    """Polarization of the quadratic form: ``a.c - b.d``."""
    return x.first.dot(y.first) - x.second.dot(y.second)


def oct_conj_Q_dot(x: SplitOctonion, y: SplitOctonion):
    return oct_conj(x), quadratic_form(x), oct_dot(x, y)


def unit(zero=Rat(0), one=Rat(1)) -> SplitOctonion:
    return SplitOctonion(Quaternion(one, zero, zero, zero), Quaternion(zero, zero, zero, zero))


def associator(x: SplitOctonion, y: SplitOctonion, z: SplitOctonion) -> SplitOctonion:
    """``(xy)z - x(yz)``."""
    return oct_mul(oct_mul(x, y), z) - oct_mul(x, oct_mul(y, z))


# --- imaginary split octonions as 7-tuples ---------------------------------

def embed(v: Sequence) -> SplitOctonion:
    """Imaginary 7-vector to split octonion with zero real part."""
    if len(v) != 7:
        raise ValueError(f"imaginary split octonion needs 7 coefficients, got {len(v)}")
    zero = 0 * v[0]
    return SplitOctonion(Quaternion(zero, v[0], v[1], v[2]), Quaternion(v[3], v[4], v[5], v[6]))


def imag_part(x: SplitOctonion) -> Vec7:
    """Drop the real part."""
    return (x.first.b, x.first.c, x.first.d) + tuple(x.second)


def basis_vector(n: int, one=Rat(1)) -> Vec7:
    """``e_n`` for ``n`` in 1..7."""
    if not 1 <= n <= 7:
        raise ValueError("basis index must be in 1..7")
    zero = one * 0
    return tuple(one if k == n - 1 else zero for k in range(7))


BASIS: Tuple[Vec7, ...] = tuple(basis_vector(n) for n in range(1, 8))


def dot(x: Sequence, y: Sequence):
    return (x[0] * y[0] + x[1] * y[1] + x[2] * y[2]
            - x[3] * y[3] - x[4] * y[4] - x[5] * y[5] - x[6] * y[6])


def Q(x: Sequence):
    return dot(x, x)


def cross_commutator(x: Sequence, y: Sequence) -> Vec7:
    """Half the commutator of two imaginary split octonions, computed directly."""
    ex, ey = embed(x), embed(y)
    comm = oct_mul(ex, ey) - oct_mul(ey, ex)
    if comm.real() != 0:
        raise ArithmeticError("commutator of imaginaries has a real part")
    return tuple(c * HALF for c in imag_part(comm))


def _cross_table():
    table = {}
    for a in range(7):
        for b in range(7):
            v = cross_commutator(BASIS[a], BASIS[b])
            table[a, b] = tuple((c, t) for c, t in enumerate(v) if t != 0)
    return table


# (a, b) -> ((c, coefficient), ...) with e_a x e_b = sum coefficient * e_c
CROSS_TABLE = _cross_table()


# every structure constant is +-1; store the sign as a bool for speed
_CROSS_ROWS = tuple(tuple(tuple((c, t > 0) for c, t in CROSS_TABLE[a, b]) for b in range(7))
                    for a in range(7))


def cross(x: Sequence, y: Sequence) -> Vec7:
    """Cross product via the structure table; equals ``cross_commutator``."""
    out = [0 * x[0] * y[0]] * 7
    ys = [(b, yb) for b, yb in enumerate(y) if yb != 0]
    for a, xa in enumerate(x):
        if xa == 0:
            continue
        row = _CROSS_ROWS[a]
        for b, yb in ys:
            p = xa * yb
            for c, positive in row[b]:
                if positive:
                    out[c] += p
                else:
                    out[c] -= p
    return tuple(out)


def imag_mul(x: Sequence, y: Sequence) -> SplitOctonion:
    return oct_mul(embed(x), embed(y))


def vadd(x: Sequence, y: Sequence) -> Vec7:
    return tuple(a + b for a, b in zip(x, y))


def vsub(x: Sequence, y: Sequence) -> Vec7:
    return tuple(a - b for a, b in zip(x, y))


def vscale(s, x: Sequence) -> Vec7:
    return tuple(s * a for a in x)


def vzero(x: Sequence) -> bool:
    return all(a == 0 for a in x)


def lincomb(coeffs: Sequence, vectors: Sequence[Sequence]) -> Vec7:
    out = None
    for c, v in zip(coeffs, vectors):
        term = vscale(c, v)
        out = term if out is None else vadd(out, term)
    return out


def gram_matrix(vectors: Sequence[Sequence]):
    return [[dot(u, v) for v in vectors] for u in vectors]


# --- float quaternion exponential (kinematics only) -------------------------

def quat_exp_imag(w: Sequence[float], theta: float, tol: float = 1e-12) -> Quaternion:
    """``exp(theta * w) = cos(theta) + sin(theta) w`` for a unit imaginary ``w``."""
    w = tuple(float(t) for t in w)
    if len(w) != 3:
        raise ValueError("w must be a 3-vector")
    n = math.sqrt(w[0] ** 2 + w[1] ** 2 + w[2] ** 2)
    if abs(n - 1.0) > tol:
        raise ValueError(f"w must be a unit vector, |w| = {n!r}")
    s = math.sin(theta)
    return Quaternion(math.cos(theta), s * w[0], s * w[1], s * w[2])
