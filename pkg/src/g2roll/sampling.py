"""Seeded generators of exact random test data.

Null vectors are produced without solving quadratics.  A rational unit
quaternion is ``p / conj(p) = p^2 / |p|^2``, so ``(a, a p^2 / |p|^2)`` is an
exactly null imaginary split octonion for any imaginary ``a``.  Complex null
vectors are Gaussian-rational combinations inside an annihilator, which is
a null subspace.
"""
from __future__ import annotations

import random
from typing import Tuple

from .algebra import (Quaternion, SplitOctonion, Vec7, cross, dot, lincomb,
                      vzero)
from .incidence import annihilator, roll_distance
from .linalg import nullspace, rank
from .scalars import GaussRational, Rat
from .triples import (STANDARD_TRIPLE, G2Element, NullTriple, complete_pair,
                      g2_from_triples, dot_row)


def rational(rng: random.Random, bound: int = 6, den: int = 4) -> Rat:
    return Rat(rng.randint(-bound, bound), rng.randint(1, den))


def nonzero_rational(rng: random.Random, bound: int = 6, den: int = 4) -> Rat:
    while True:
        r = rational(rng, bound, den)
        if r:
            return r


def gauss(rng: random.Random, bound: int = 4, den: int = 3) -> GaussRational:
    return GaussRational(rational(rng, bound, den), rational(rng, bound, den))


def quaternion(rng: random.Random) -> Quaternion:
    return Quaternion(*(rational(rng) for _ in range(4)))


def split_octonion(rng: random.Random) -> SplitOctonion:
    return SplitOctonion(quaternion(rng), quaternion(rng))


def imaginary(rng: random.Random) -> Vec7:
    return tuple(rational(rng) for _ in range(7))


def null_vector(rng: random.Random) -> Vec7:
    while True:
        a = Quaternion.pure([rational(rng) for _ in range(3)])
        p = quaternion(rng)
        n = p.norm2()
        if a.is_zero() or n == 0:
            continue
        b = a * (p * p) * (1 / n)
        s = nonzero_rational(rng, 3, 2)
        return tuple(s * c for c in (a.b, a.c, a.d, b.a, b.b, b.c, b.d))


def _random_in_span(rng, basis, coeff=rational):
    while True:
        v = lincomb([coeff(rng) for _ in basis], basis)
        if not vzero(v):
            return v


def pair_at_distance(rng: random.Random, d: int) -> Tuple[Vec7, Vec7]:
    """Two null vectors whose points are exactly ``d`` rolls apart."""
    x = null_vector(rng)
    while True:
        if d == 0:
            s = nonzero_rational(rng)
            y = tuple(s * c for c in x)
        elif d == 1:
            y = _random_in_span(rng, annihilator(x))
        elif d == 2:
            m = _random_in_span(rng, annihilator(x))
            y = _random_in_span(rng, annihilator(m))
        else:
            y = null_vector(rng)
        if roll_distance(x, y) == d:
            return x, y


def null_triple(rng: random.Random) -> NullTriple:
    x, y = pair_at_distance(rng, 2)
    c = cross(x, y)
    kernel = nullspace([dot_row(x), dot_row(y), dot_row(c)], 7)
    offset = lincomb([rational(rng, 3, 2) for _ in kernel], kernel)
    return complete_pair(x, y, offset)


def g2_element(rng: random.Random) -> G2Element:
    return g2_from_triples(STANDARD_TRIPLE, null_triple(rng))


def complex_null_vector(rng: random.Random) -> Vec7:
    ann = annihilator(null_vector(rng))
    return _random_in_span(rng, ann, gauss)


def complex_two_roll_pair(rng: random.Random) -> Tuple[Vec7, Vec7]:
    """Complex null ``x, z`` with ``x . z = 0`` and ``x cross z != 0``.

    ``x`` lies in a real annihilator, the midpoint ``m`` in ``Ann_x`` and ``z``
    in ``Ann_m``, all with Gaussian-rational coefficients.
    """
    x = complex_null_vector(rng)
    while True:
        ann_x = annihilator(x)
        m = _random_in_span(rng, ann_x, gauss)
        if rank([x, m]) < 2:
            continue
        z = _random_in_span(rng, annihilator(m), gauss)
        if dot(x, z) == 0 and not vzero(cross(x, z)):
            return x, z


def complex_vector(rng: random.Random) -> Vec7:
    return tuple(gauss(rng) for _ in range(7))
