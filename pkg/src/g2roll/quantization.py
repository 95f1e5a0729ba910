"""Sections, the correspondence of two-roll triples and the comultiplication.

An imaginary bioctonion ``w`` gives the section ``s_w``, whose value at a
null ``x`` is the functional ``x -> w . x``.  The comultiplication takes
``w`` to the bilinear form ``x (x) z -> w . (x cross z)``, and its adjoint
under the dot pairing is the cross product.  Everything here is exact and
works over rationals or Gaussian rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .algebra import BASIS, SIGNATURE, Q, Vec7, cross, dot, imag_mul, vzero
from .errors import NotNull, ZeroVector
from .incidence import point_from_vector
from .linalg import inverse, mat_vec
from .scalars import GaussRational, Rat

SIXTH = Rat(1, 6)


def _vec(p) -> Vec7:
    return tuple(p.rep) if hasattr(p, "rep") else tuple(p)


@dataclass(frozen=True)
class Section:
    """The section ``s_w``; evaluating at ``x`` gives ``w . x``."""

    w: Vec7

    def __post_init__(self):
        if len(self.w) != 7:
            raise ValueError("a section is generated by a 7-vector")
        object.__setattr__(self, "w", tuple(self.w))

    def __call__(self, x):
        return section_eval(self.w, x)


@dataclass(frozen=True)
class Bilinear:
    """A 7x7 matrix ``B`` read as ``B(x (x) z) = sum B[a][b] x_a z_b``."""

    matrix: Tuple[Tuple[object, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(r) for r in self.matrix)
        if len(m) != 7 or any(len(r) != 7 for r in m):
            raise ValueError("bilinear form needs a 7x7 matrix")
        object.__setattr__(self, "matrix", m)

    def __call__(self, x: Sequence, z: Sequence):
        total = Rat(0)
        for a in range(7):
            if x[a] == 0:
                continue
            row = self.matrix[a]
            for b in range(7):
                if z[b] != 0 and row[b] != 0:
                    total = total + x[a] * row[b] * z[b]
        return total


def section_eval(w: Sequence, x: Sequence):
    x = _vec(x)
    if vzero(x):
        raise ZeroVector("sections are evaluated at nonzero null vectors")
    if Q(x) != 0:
        raise NotNull("sections are evaluated at null vectors")
    return dot(tuple(w), x)


def _imag(c) -> object:
    return c.im if isinstance(c, GaussRational) else Rat(0)


def is_real_section(w: Sequence) -> bool:
    """True iff ``w`` is an imaginary split octonion (no imaginary parts)."""
    return all(_imag(c) == 0 for c in w)


def real_null_spanning_set() -> List[Vec7]:
    """The real null vectors ``e_a +- e_b`` (``a`` positive, ``b`` negative); they span I."""
    out = []
    for a in range(3):
        for b in range(3, 7):
            for s in (1, -1):
                v = [Rat(0)] * 7
                v[a], v[b] = Rat(1), Rat(s)
                out.append(tuple(v))
    return out


def real_on_spanning_set(w: Sequence) -> bool:
    """Whether ``s_w`` takes real values on every vector of the real spanning set."""
    return all(_imag(section_eval(w, x)) == 0 for x in real_null_spanning_set())


def in_S(a, b, c) -> bool:
    """Whether ``(a, b, c)`` lies in the correspondence: ``xy = 0 = yz`` and ``xz != 0``.

    When it does, ``b`` is necessarily ``<x cross z>``; this is asserted.
    """
    x, y, z = _vec(a), _vec(b), _vec(c)
    for name, v in (("a", x), ("b", y), ("c", z)):
        if vzero(v):
            raise ZeroVector(f"{name} is the zero vector")
        if Q(v) != 0:
            raise NotNull(f"{name} is not null")
    ok = (imag_mul(x, y).is_zero() and imag_mul(y, z).is_zero()
          and not imag_mul(x, z).is_zero())
    if ok and point_from_vector(y) != point_from_vector(cross(x, z)):
        raise ArithmeticError("middle point differs from <x cross z>")
    return ok


def delta(w: Sequence) -> Bilinear:
    """Comultiplication: ``B[a][b] = w . (e_a cross e_b)``."""
    w = tuple(w)
    return Bilinear(tuple(tuple(dot(w, cross(ea, eb)) for eb in BASIS) for ea in BASIS))


def delta_adjoint() -> List[List[Vec7]]:
    """Structure tensor ``T[a][b]`` of the adjoint of ``w -> delta(w)``.

    The adjoint ``D`` is defined by ``D(u (x) v) . w = delta(w)(u (x) v)``.
    Writing ``D(e_a (x) e_b) = sum_c T[a][b][c] e_c`` gives
    ``G T[a][b] = (delta(e_c)[a][b])_c``, solved with the inverse Gram matrix.
    """
    gram = [[Rat(s) if i == j else Rat(0) for j, s in enumerate(SIGNATURE)] for i in range(7)]
    ginv = inverse(gram)
    deltas = [delta(e).matrix for e in BASIS]
    return [[mat_vec(ginv, [deltas[c][a][b] for c in range(7)]) for b in range(7)]
            for a in range(7)]


def apply_adjoint(tensor, u: Sequence, v: Sequence) -> Vec7:
    out = [Rat(0)] * 7
    for a in range(7):
        if u[a] == 0:
            continue
        for b in range(7):
            if v[b] == 0:
                continue
            p = u[a] * v[b]
            for c in range(7):
                t = tensor[a][b][c]
                if t != 0:
                    out[c] = out[c] + t * p
    return tuple(out)


def cross_tensor() -> List[List[Vec7]]:
    return [[cross(ea, eb) for eb in BASIS] for ea in BASIS]


def double_cross_matrix(a: Sequence, b: Sequence):
    """Matrix (columns) of ``c -> a cross (b cross c)``."""
    cols = [cross(a, cross(b, e)) for e in BASIS]
    return [[cols[j][i] for j in range(7)] for i in range(7)]


def trace_dot(a: Sequence, b: Sequence):
    """``-(1/6) tr(c -> a cross (b cross c))``, which equals ``a . b``."""
    m = double_cross_matrix(a, b)
    return -SIXTH * sum((m[i][i] for i in range(7)), Rat(0))
