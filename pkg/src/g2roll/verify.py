"""Seeded verification suites over every module's invariants.

Each check draws its own generator from ``(seed, check name)``, so a check
gives the same verdict whether it runs alone or inside ``all``.  Exact
checks report ``0`` or the first counterexample; float checks report the
worst residual seen.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional

import numpy as np

from . import kinematics as kin
from . import sampling as S
from .algebra import (BASIS, associator, cross, cross_commutator, dot, imag_mul,
                      oct_mul, quadratic_form)
from .incidence import (annihilator, connecting_chain,
                        joint_annihilator, point_from_vector, roll_distance)
from .linalg import rank
from .quantization import (cross_tensor, delta, delta_adjoint, in_S,
                           is_real_section, real_on_spanning_set, trace_dot)
from .serialize import encode
from .triples import (STANDARD_TRIPLE, G2Element, apartment_basis,
                      g2_from_triples, hexagon_check, pair_transporter)

SUITES = ("algebra", "incidence", "hexagon", "torsor", "ratio", "quantization")
DEFAULT_SAMPLES = {"algebra": 1000, "incidence": 100, "hexagon": 100,
                   "torsor": 100, "ratio": 1000, "quantization": 100}


@dataclass
class CheckResult:
    check: str
    samples: int
    status: str
    worst: object

    def as_dict(self) -> dict:
        return {"check": self.check, "samples": self.samples, "status": self.status,
                "worst_residual_or_counterexample": self.worst}


def _rng(seed: int, name: str) -> random.Random:
    return random.Random(f"{seed}:{name}")


def _np_rng(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng(random.Random(f"{seed}:{name}").getrandbits(64))


def _exact(name: str, n: int, trial: Callable[[random.Random], Optional[object]], seed: int) -> CheckResult:
    """Run ``trial`` ``n`` times; a non-None return is a counterexample."""
    rng = _rng(seed, name)
    for _ in range(n):
        bad = trial(rng)
        if bad is not None:
            return CheckResult(name, n, "fail", encode(bad))
    return CheckResult(name, n, "pass", 0)


def _float(name: str, n: int, residual: Callable[[np.random.Generator], float],
           tol: float, seed: int) -> CheckResult:
    rng = _np_rng(seed, name)
    worst = max(residual(rng) for _ in range(n))
    return CheckResult(name, n, "pass" if worst <= tol else "fail", worst)


# --- algebra ------------------------------------------------------------------

def _algebra(seed: int, n: int) -> List[CheckResult]:
    def composition(rng):
        x, y = S.split_octonion(rng), S.split_octonion(rng)
        if quadratic_form(oct_mul(x, y)) != quadratic_form(x) * quadratic_form(y):
            return {"x": x.coefficients(), "y": y.coefficients()}

    def antisymmetry(rng):
        x, y, z = (S.split_octonion(rng) for _ in range(3))
        a = associator(x, y, z)
        for b in (-associator(y, x, z), -associator(x, z, y), associator(y, z, x)):
            if a != b:
                return {"x": x.coefficients(), "y": y.coefficients(), "z": z.coefficients()}

    def moufang(rng):
        x, y, z = (S.split_octonion(rng) for _ in range(3))
        lhs = oct_mul(oct_mul(z, y), oct_mul(x, z))
        rhs = oct_mul(oct_mul(z, oct_mul(y, x)), z)
        if lhs != rhs:
            return {"x": x.coefficients(), "y": y.coefficients(), "z": z.coefficients()}

    def cross_rule(rng):
        x, y = S.imaginary(rng), S.imaginary(rng)
        prod = imag_mul(x, y)
        c = cross(x, y)
        if c != cross_commutator(x, y) or prod.real() != -dot(x, y) \
                or tuple(prod.coefficients()[1:]) != tuple(c):
            return {"x": x, "y": y}

    return [_exact("algebra.composition", n, composition, seed),
            _exact("algebra.associator_antisymmetry", n, antisymmetry, seed),
            _exact("algebra.moufang", n, moufang, seed),
            _exact("algebra.imaginary_product", n, cross_rule, seed)]


# --- incidence -----------------------------------------------------------------

WORKED_DISTANCES = [
    ((1, 0, 0, 0, 1, 0, 0), (1, 0, 0, 0, 1, 0, 0), 0),
    ((1, 0, 0, 0, 1, 0, 0), (0, 1, 0, 0, 0, -1, 0), 1),
    ((1, 0, 0, 0, 1, 0, 0), (0, 1, 0, 0, 0, 1, 0), 2),
    ((1, 0, 0, 0, 1, 0, 0), (1, 0, 0, 0, -1, 0, 0), 3),
]


def _incidence(seed: int, n: int) -> List[CheckResult]:
    def ann(rng):
        x = S.null_vector(rng)
        basis = annihilator(x)
        if len(basis) != 3 or rank(basis) != 3:
            return {"x": x, "reason": "rank"}
        for u in basis:
            if dot(u, u) != 0 or not imag_mul(u, x).is_zero():
                return {"x": x, "reason": "null"}
            for v in basis:
                if imag_mul(u, v) != -imag_mul(v, u):
                    return {"x": x, "reason": "anticommute"}

    def worked(_rng):
        for a, b, d in WORKED_DISTANCES:
            if roll_distance(a, b) != d:
                return {"a": a, "b": b, "expected": d}

    def midpoint_kernel(rng):
        x, z = S.pair_at_distance(rng, 2)
        k = joint_annihilator(x, z)
        if len(k) != 1 or rank(k + [cross(x, z)]) != 1:
            return {"x": x, "z": z}

    def chains(rng):
        for d in (2, 3):
            a, b = S.pair_at_distance(rng, d)
            chain = connecting_chain(a, b)
            if len(chain) != d + 1 or chain[0] != point_from_vector(a) \
                    or chain[-1] != point_from_vector(b):
                return {"a": a, "b": b, "reason": "endpoints"}
            if any(roll_distance(p, q) != 1 for p, q in zip(chain, chain[1:])):
                return {"a": a, "b": b, "reason": "links"}

    return [_exact("incidence.annihilator", n, ann, seed),
            _exact("incidence.worked_distances", 1, worked, seed),
            _exact("incidence.midpoint_kernel", n, midpoint_kernel, seed),
            _exact("incidence.chains", n, chains, seed)]


# --- hexagon --------------------------------------------------------------------

def _hexagon_trial(t) -> Optional[dict]:
    failed = [r["rule"] for r in hexagon_check(t) if r["status"] != "pass"]
    if failed or apartment_basis(t).determinant() == 0:
        return {"triple": tuple(t), "rules": failed}
    return None


def _hexagon(seed: int, n: int) -> List[CheckResult]:
    return [_exact("hexagon.standard", 1, lambda _r: _hexagon_trial(STANDARD_TRIPLE), seed),
            _exact("hexagon.random", n, lambda r: _hexagon_trial(S.null_triple(r)), seed)]


# --- torsor ---------------------------------------------------------------------

def _torsor(seed: int, n: int) -> List[CheckResult]:
    def maps(rng):
        t1, t2 = S.null_triple(rng), S.null_triple(rng)
        g = g2_from_triples(t1, t2)  # construction checks dot and cross preservation
        if g.apply_triple(t1) != t2:
            return {"t1": tuple(t1), "t2": tuple(t2)}

    def laws(rng):
        t1, t2, t3 = S.null_triple(rng), S.null_triple(rng), S.null_triple(rng)
        if g2_from_triples(t1, t1) != G2Element.identity():
            return {"t": tuple(t1), "law": "identity"}
        g12, g23 = g2_from_triples(t1, t2), g2_from_triples(t2, t3)
        if g2_from_triples(t2, t1) != g12.inverse():
            return {"t1": tuple(t1), "t2": tuple(t2), "law": "inverse"}
        if g2_from_triples(t1, t3) != g23 @ g12:
            return {"t1": tuple(t1), "t2": tuple(t2), "t3": tuple(t3), "law": "composition"}

    def cyclic(_rng):
        g = g2_from_triples(STANDARD_TRIPLE, STANDARD_TRIPLE.rotated())
        if g ** 3 != G2Element.identity() or g == G2Element.identity():
            return {"matrix": g.matrix}

    per_class = max(1, n // 2)

    def transitivity(rng):
        for d in range(4):
            pa, pb = S.pair_at_distance(rng, d), S.pair_at_distance(rng, d)
            g = pair_transporter(pa, pb)
            if g(point_from_vector(pa[0])) != point_from_vector(pb[0]) \
                    or g(point_from_vector(pa[1])) != point_from_vector(pb[1]):
                return {"a": pa, "b": pb}

    def invariance(rng):
        g = S.g2_element(rng)
        d = rng.randrange(4)
        a, b = S.pair_at_distance(rng, d)
        if roll_distance(g(a), g(b)) != d:
            return {"a": a, "b": b, "g": g.matrix}

    return [_exact("torsor.maps_triples", n, maps, seed),
            _exact("torsor.laws", max(1, n // 4), laws, seed),
            _exact("torsor.cyclic_order_three", 1, cyclic, seed),
            _exact("torsor.pair_transitivity", per_class, transitivity, seed),
            _exact("torsor.distance_invariance", n, invariance, seed)]


# --- ratio ------------------------------------------------------------------------

def _ratio(seed: int, n: int) -> List[CheckResult]:
    out = []
    d3 = kin.null_defect(3.0, 1000)
    out.append(CheckResult("ratio.defect_R3", 1000, "pass" if d3 <= 1e-12 else "fail", d3))
    others = {R: kin.null_defect(float(R), 1000) for R in (1, 2, 4, 5)}
    low = min(others.values())
    out.append(CheckResult("ratio.defect_other_R", 4, "pass" if low > 0.1 else "fail",
                           {str(R): v for R, v in others.items()}))
    closed = max(abs(others[1] - 2.0) / 1e-6, abs(others[2] - 1.125) / 1e-3)
    out.append(CheckResult("ratio.defect_closed_form", 2, "pass" if closed <= 1 else "fail",
                           {"R1": others[1], "R2": others[2]}))
    turns = max(abs(kin.accumulated_turn(kin.RollingLineParams.standard(R)) - 2 * math.pi * (R + 1))
                for R in (1.0, 2.0, 3.0))
    out.append(CheckResult("ratio.turns_per_revolution", 3, "pass" if turns <= 1e-8 else "fail", turns))

    def nonslip(rng):
        return kin.nonslip_check(kin.random_params(rng), float(rng.uniform(0, math.pi)), 1e-6)

    def cover(rng):
        return kin.cover_residual(kin.random_params(rng), float(rng.uniform(0, 2 * math.pi)))

    def tau_round_trip(rng):
        p = kin.random_params(rng)
        c = kin.ProjectiveConfig(p.u, p.q)
        back = kin.tau_inv(kin.tau(c))
        return float(max(np.abs(back.v - c.v).max(), np.abs(back.q - c.q).max()))

    def span(rng):
        return kin.line_span_residual(kin.random_params(rng, 3.0), float(rng.uniform(0, math.pi)))

    def nullity(rng):
        return abs(kin.pc_trajectory(kin.random_params(rng), float(rng.uniform(0, math.pi))).q_value())

    m = max(1, n // 10)
    out += [_float("ratio.nonslip", m, nonslip, 1e-6, seed),
            _float("ratio.cover_coherence", n, cover, 1e-10, seed),
            _float("ratio.tau_round_trip", n, tau_round_trip, 1e-12, seed),
            _float("ratio.R3_span_membership", m, span, 1e-12, seed),
            _float("ratio.nullity", m, nullity, 1e-12, seed)]
    return out


# --- quantization -------------------------------------------------------------------

def _quantization(seed: int, n: int) -> List[CheckResult]:
    def trace_basis(_rng):
        for a in BASIS:
            for b in BASIS:
                if trace_dot(a, b) != dot(a, b):
                    return {"a": a, "b": b}

    def trace_random(rng):
        a, b = S.imaginary(rng), S.imaginary(rng)
        if trace_dot(a, b) != dot(a, b):
            return {"a": a, "b": b}

    def extension(rng):
        x, z = S.complex_two_roll_pair(rng)
        w = S.complex_vector(rng)
        if delta(w)(x, z) != dot(w, cross(x, z)) or not in_S(x, cross(x, z), z):
            return {"w": w, "x": x, "z": z}

    def adjoint(_rng):
        if delta_adjoint() != cross_tensor():
            return {"reason": "adjoint tensor differs from cross tensor"}

    def equivariance(rng):
        g = S.g2_element(rng)
        x, z = S.complex_two_roll_pair(rng)
        w = S.complex_vector(rng)
        if delta(g(w))(g(x), g(z)) != delta(w)(x, z):
            return {"g": g.matrix, "w": w, "x": x, "z": z}

    def real_sections(rng):
        w = S.complex_vector(rng) if rng.random() < 0.5 else S.imaginary(rng)
        if is_real_section(w) != real_on_spanning_set(w):
            return {"w": w}

    return [_exact("quantization.trace_basis", 1, trace_basis, seed),
            _exact("quantization.trace_random", 10 * n, trace_random, seed),
            _exact("quantization.delta_extension", n, extension, seed),
            _exact("quantization.adjoint_is_cross", 1, adjoint, seed),
            _exact("quantization.equivariance", max(1, n // 5), equivariance, seed),
            _exact("quantization.real_section_criterion", n, real_sections, seed)]


RUNNERS: Dict[str, Callable[[int, int], List[CheckResult]]] = {
    "algebra": _algebra, "incidence": _incidence, "hexagon": _hexagon,
    "torsor": _torsor, "ratio": _ratio, "quantization": _quantization,
}


def verify_suite(name: str, seed: int = 0, samples: Optional[int] = None) -> dict:
    """Run a suite (or ``all``) and return a JSON-ready report."""
    if name != "all" and name not in RUNNERS:
        raise KeyError(f"unknown suite {name!r}")
    names = SUITES if name == "all" else (name,)
    checks = []
    for suite in names:
        n = samples if samples is not None else DEFAULT_SAMPLES[suite]
        checks.extend(RUNNERS[suite](seed, n))
    status = "pass" if all(c.status == "pass" for c in checks) else "fail"
    return {"suite": name, "seed": seed, "samples": samples, "status": status,
            "checks": [c.as_dict() for c in checks]}
