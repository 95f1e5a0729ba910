"""Acceptance criteria, one test each, at the stated sample sizes and tolerances.

Every test prints a single ``[criterion N] PASS|FAIL ...`` line (visible in
``pytest -v`` output) before asserting.
"""
import math
import random

import numpy as np
import pytest

from g2roll import kinematics as kin
from g2roll import sampling as S
from g2roll.algebra import (BASIS, SIGNATURE, associator, cross, dot, imag_mul,
                            oct_mul, quadratic_form)
from g2roll.incidence import (annihilator, classify_pair, connecting_chain,
                              joint_annihilator, point_from_vector, roll_distance)
from g2roll.linalg import matmul, rank, transpose
from g2roll.quantization import (cross_tensor, delta, delta_adjoint, section_eval,
                                 trace_dot)
from g2roll.scalars import Rat
from g2roll.triples import (STANDARD_TRIPLE, G2Element, apartment_basis,
                            g2_from_triples, hexagon_check, pair_transporter)

from conftest import II, J_MJ, JJ, K_MK, I_MI

P = point_from_vector
GRAM = [[s if i == j else 0 for j, s in enumerate(SIGNATURE)] for i in range(7)]
HALF = Rat(1, 2)


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail
    return emit


def preserves_dot_and_cross(m) -> bool:
    if matmul(matmul(transpose(m), GRAM), m) != GRAM:
        return False
    cols = transpose(m)
    for i in range(7):
        for j in range(i + 1, 7):
            c = cross(BASIS[i], BASIS[j])
            image = tuple(sum(m[r][k] * c[k] for k in range(7)) for r in range(7))
            if image != cross(cols[i], cols[j]):
                return False
    return True


def test_criterion_01_composition_law(report):
    rng = random.Random(101)
    bad = 0
    for _ in range(1000):
        x, y = S.split_octonion(rng), S.split_octonion(rng)
        bad += quadratic_form(oct_mul(x, y)) != quadratic_form(x) * quadratic_form(y)
    report(1, bad == 0, f"Q(xy)=Q(x)Q(y) exact on 1000 samples, failures={bad}")


def test_criterion_02_alternativity_and_moufang(report):
    rng = random.Random(102)
    anti = moufang = 0
    for _ in range(1000):
        x, y, z = (S.split_octonion(rng) for _ in range(3))
        a = associator(x, y, z)
        anti += not (a == -associator(y, x, z) == -associator(x, z, y)
                     == -associator(z, y, x) == associator(y, z, x))
    for _ in range(1000):
        x, y, z = (S.split_octonion(rng) for _ in range(3))
        moufang += oct_mul(oct_mul(z, y), oct_mul(x, z)) != oct_mul(oct_mul(z, oct_mul(y, x)), z)
    report(2, anti == 0 and moufang == 0,
           f"associator antisymmetry failures={anti}/1000, Moufang failures={moufang}/1000")


def _hexagon_ok(t) -> bool:
    b = apartment_basis(t)
    outer = [b["x"], b["x*y"], b["y"], b["y*z"], b["z"], b["z*x"]]
    return (all(r["status"] == "pass" for r in hexagon_check(t))
            and len(hexagon_check(t)) == 8
            and dot(b["w"], b["w"]) == -1
            and all(dot(outer[i], outer[i + 3]) == HALF for i in range(3))
            and b.determinant() != 0)


def test_criterion_03_hexagon_table(report):
    rng = random.Random(103)
    standard = _hexagon_ok(STANDARD_TRIPLE)
    bad = sum(not _hexagon_ok(S.null_triple(rng)) for _ in range(100))
    report(3, standard and bad == 0,
           f"standard triple ok={standard}; random triples failing={bad}/100")


def test_criterion_04_torsor(report):
    rng = random.Random(104)
    bad = 0
    for _ in range(100):
        t1, t2 = S.null_triple(rng), S.null_triple(rng)
        g = g2_from_triples(t1, t2)
        bad += not (preserves_dot_and_cross(g.matrix) and g.apply_triple(t1) == t2)
    identity_ok = all(g2_from_triples(t, t) == G2Element.identity()
                      for t in (STANDARD_TRIPLE, S.null_triple(rng)))
    comp_bad = 0
    for _ in range(10):
        t1, t2, t3 = S.null_triple(rng), S.null_triple(rng), S.null_triple(rng)
        comp_bad += g2_from_triples(t1, t3) != g2_from_triples(t2, t3) @ g2_from_triples(t1, t2)
    cyc = g2_from_triples(STANDARD_TRIPLE, STANDARD_TRIPLE.rotated())
    order3 = cyc ** 3 == G2Element.identity() and cyc != G2Element.identity()
    report(4, bad == 0 and identity_ok and comp_bad == 0 and order3,
           f"pairs failing={bad}/100, g(t,t)=I {identity_ok}, composition failures={comp_bad}/10, M^3=I {order3}")


def test_criterion_05_annihilator(report):
    rng = random.Random(105)
    bad = 0
    for _ in range(100):
        x = S.null_vector(rng)
        ann = annihilator(x)
        ok = len(ann) == 3 and rank(ann) == 3
        for u in ann:
            for v in ann:
                ok = ok and dot(u, v) == 0 and imag_mul(u, v) == -imag_mul(v, u)
        bad += not ok
    ex = annihilator(II)
    example = rank(ex) == 3 and rank(ex + [II, J_MJ, K_MK]) == 3
    report(5, bad == 0 and example,
           f"random failures={bad}/100; Ann_(i,i) = span{{(i,i),(j,-j),(k,-k)}} {example}")


def test_criterion_06_distance_and_midpoint(report):
    worked = [roll_distance(P(II), P(II)), roll_distance(P(II), P(J_MJ)),
              roll_distance(P(II), P(JJ)), roll_distance(P(II), P(I_MI))]
    classes = [classify_pair(P(II), P(v)).value for v in (II, J_MJ, JJ, I_MI)]
    examples_ok = worked == [0, 1, 2, 3] and classes == ["X0", "X1", "X2", "X3"]
    rng = random.Random(106)
    kernel_bad = chain_bad = 0
    for _ in range(100):
        x, z = S.pair_at_distance(rng, 2)
        k = joint_annihilator(x, z)
        kernel_bad += not (len(k) == 1 and rank(k + [cross(x, z)]) == 1)
    for d in (2, 3):
        for _ in range(100):
            a, b = S.pair_at_distance(rng, d)
            chain = connecting_chain(a, b)
            ok = len(chain) == d + 1 and chain[0] == P(a) and chain[-1] == P(b)
            ok = ok and all(imag_mul(p.rep, q.rep).is_zero() for p, q in zip(chain, chain[1:]))
            chain_bad += not ok
    report(6, examples_ok and kernel_bad == 0 and chain_bad == 0,
           f"worked examples {worked}, kernel failures={kernel_bad}/100, chain failures={chain_bad}/200")


def test_criterion_07_one_to_three_ratio(report):
    d = {R: kin.null_defect(float(R), 1000) for R in (1, 2, 3, 4, 5)}
    ok = (d[3] <= 1e-12 and all(d[R] > 0.1 for R in (1, 2, 4, 5))
          and abs(d[1] - 2.0) <= 1e-6 and abs(d[2] - 1.125) <= 1e-3)
    report(7, ok, "defects " + ", ".join(f"R={R}: {v:.6g}" for R, v in d.items()))


def test_criterion_08_turns_and_nonslip(report):
    turn_err = max(abs(kin.accumulated_turn(kin.RollingLineParams.standard(R)) - 2 * math.pi * (R + 1))
                   for R in (1.0, 2.0, 3.0))
    rng = np.random.default_rng(108)
    slip = max(kin.nonslip_check(kin.random_params(rng, R), float(rng.uniform(0, math.pi)), 1e-6)
               for R in (1.0, 2.0, 3.0) for _ in range(20))
    report(8, turn_err <= 1e-8 and slip < 1e-6,
           f"turn error {turn_err:.3g} (tol 1e-8), non-slip residual {slip:.3g} (tol 1e-6)")


def test_criterion_09_trace_formula(report):
    basis_bad = sum(trace_dot(a, b) != dot(a, b) for a in BASIS for b in BASIS)
    rng = random.Random(109)
    random_bad = 0
    for _ in range(1000):
        a, b = S.imaginary(rng), S.imaginary(rng)
        random_bad += trace_dot(a, b) != dot(a, b)
    report(9, basis_bad == 0 and random_bad == 0,
           f"basis failures={basis_bad}/49, random failures={random_bad}/1000")


def test_criterion_10_quantization(report):
    rng = random.Random(110)
    ext_bad = 0
    for _ in range(100):
        x, z = S.complex_two_roll_pair(rng)
        w = S.complex_vector(rng)
        ext_bad += delta(w)(x, z) != section_eval(w, cross(x, z))
    tensor_ok = delta_adjoint() == cross_tensor()
    eq_bad = 0
    for _ in range(20):
        g = S.g2_element(rng)
        x, z = S.complex_two_roll_pair(rng)
        w = S.complex_vector(rng)
        eq_bad += delta(g(w))(g(x), g(z)) != delta(w)(x, z)
    report(10, ext_bad == 0 and tensor_ok and eq_bad == 0,
           f"extension failures={ext_bad}/100, adjoint = cross tensor {tensor_ok}, "
           f"equivariance failures={eq_bad}/20")


def test_criterion_11_orbit_transitivity(report):
    rng = random.Random(111)
    bad = {}
    for d in range(4):
        fails = 0
        for _ in range(50):
            pa, pb = S.pair_at_distance(rng, d), S.pair_at_distance(rng, d)
            g = pair_transporter(pa, pb)
            fails += not (preserves_dot_and_cross(g.matrix)
                          and g(P(pa[0])) == P(pb[0]) and g(P(pa[1])) == P(pb[1]))
        bad[f"X{d}"] = fails
    inv_bad = 0
    for _ in range(100):
        g = S.g2_element(rng)
        d = rng.randrange(4)
        a, b = S.pair_at_distance(rng, d)
        inv_bad += roll_distance(g(a), g(b)) != d
    report(11, not any(bad.values()) and inv_bad == 0,
           f"transport failures per class {bad}, invariance failures={inv_bad}/100")


def test_criterion_12_cover_and_tau(report):
    rng = np.random.default_rng(112)
    cover = tau_err = 0.0
    for _ in range(1000):
        p = kin.random_params(rng)
        cover = max(cover, kin.cover_residual(p, float(rng.uniform(0, 2 * math.pi))))
        c = kin.ProjectiveConfig(p.u, p.q)
        back = kin.tau_inv(kin.tau(c))
        tau_err = max(tau_err, np.abs(back.v - c.v).max(), np.abs(back.q - c.q).max())
    report(12, cover <= 1e-10 and tau_err <= 1e-12,
           f"diagram residual {cover:.3g} (tol 1e-10), tau round trip {tau_err:.3g} (tol 1e-12)")
