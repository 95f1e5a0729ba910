import io
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from g2roll import kinematics as kin
from g2roll.kinematics import (ProjectiveConfig, RollingLineParams, accumulated_turn,
                               axis_angle, cover_residual, defect_closed_form,
                               line_span_residual, nonslip_check, null_defect,
                               pc_trajectory, qexp, qmul, so3_trajectory,
                               su2_trajectory, tau, tau_inv)

I3 = np.eye(3)
U, V, W = np.array([1.0, 0, 0]), np.array([0, 1.0, 0]), np.array([0, 0, 1.0])
seeds = st.integers(0, 2 ** 32)


def rodrigues(axis, angle):
    """Independent axis-angle oracle."""
    k = np.array([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    return I3 + math.sin(angle) * k + (1 - math.cos(angle)) * k @ k


def test_axis_angle_matches_rodrigues():
    axis = np.array([1.0, 2.0, 2.0]) / 3.0
    assert np.allclose(axis_angle(axis, 0.7), rodrigues(axis, 0.7), atol=1e-14)


def test_so3_examples():
    c = so3_trajectory(U, V, I3, 1.0, 2 * math.pi)
    assert np.allclose(c.rot, I3, atol=1e-12)           # two full turns
    c0 = so3_trajectory(U, V, axis_angle(U, 0.3), 2.0, 0.0)
    assert np.allclose(c0.v, U) and np.allclose(c0.rot, axis_angle(U, 0.3))
    c3 = so3_trajectory(U, V, I3, 3.0, math.pi / 2)
    assert np.allclose(c3.rot, I3, atol=1e-12) and np.allclose(c3.v, V, atol=1e-15)


def test_su2_examples():
    p = RollingLineParams.standard(3.0)
    s0 = su2_trajectory(p, 0.0)
    assert np.allclose(s0.v, U) and np.allclose(s0.q, [1, 0, 0, 0])
    s = su2_trajectory(p, math.pi / 2)
    assert np.allclose(s.v, -U, atol=1e-12) and np.allclose(s.q, [1, 0, 0, 0], atol=1e-12)


@settings(max_examples=30)
@given(seeds, st.floats(0, 2 * math.pi))
def test_double_cover_reproduces_so3(seed, theta):
    p = kin.random_params(np.random.default_rng(seed))
    assert cover_residual(p, theta) <= 1e-10


def test_pc_examples():
    p = RollingLineParams.standard(3.0)
    assert np.allclose(pc_trajectory(p, 0.0).vec, [1, 0, 0, 0, 1, 0, 0])  # (u, uq)
    x = pc_trajectory(p, math.pi / 4)
    # exp(pi/2 k) i = j and exp(-pi/2 k) i = -j; up to sign (j, -j)
    assert np.allclose(x.vec, [0, 1, 0, 0, 0, -1, 0], atol=1e-12)
    assert line_span_residual(p, math.pi / 4) <= 1e-12


@settings(max_examples=30)
@given(seeds, st.floats(0, 2 * math.pi))
def test_pc_points_are_null_for_every_ratio(seed, theta):
    p = kin.random_params(np.random.default_rng(seed))
    assert abs(pc_trajectory(p, theta).q_value()) <= 1e-12


def test_tau_examples():
    assert np.allclose(tau(ProjectiveConfig(U, [1, 0, 0, 0])).vec, [1, 0, 0, 0, 1, 0, 0])
    # (+-j, k) -> (j, jk) = (j, i)
    assert np.allclose(tau(ProjectiveConfig(V, [0, 0, 0, 1])).vec, [0, 1, 0, 0, 1, 0, 0])
    # the sign of v is forgotten
    assert np.allclose(ProjectiveConfig(-V, [1, 0, 0, 0]).v, V)


@settings(max_examples=50)
@given(seeds)
def test_tau_round_trip(seed):
    p = kin.random_params(np.random.default_rng(seed))
    c = ProjectiveConfig(p.u, p.q)
    back = tau_inv(tau(c))
    assert np.abs(back.v - c.v).max() <= 1e-12 and np.abs(back.q - c.q).max() <= 1e-12


def test_null_defect_values():
    assert null_defect(3.0, 1000) <= 1e-12
    for R in (1.0, 2.0, 4.0, 5.0):
        assert null_defect(R, 1000) > 0.1
    assert abs(null_defect(1.0, 1000) - 2.0) <= 1e-6
    assert abs(null_defect(2.0, 1000) - 1.125) <= 1e-3
    with pytest.raises(ValueError):
        null_defect(3.0, 10)


def test_defect_matches_closed_form_pointwise():
    p = RollingLineParams.standard(2.0)
    for t1, t2 in ((0.1, 0.9), (0.0, 1.3), (0.4, 0.4)):
        d = kin.pc_vector(p, t1) @ (kin.SIGNATURE * kin.pc_vector(p, t2))
        assert abs(d - defect_closed_form(2.0, t1 - t2)) <= 1e-12
    # calculus maximum of |cos 2t - cos t| on the half period is at cos t = 1/4
    t = math.acos(0.25)
    assert abs(abs(defect_closed_form(2.0, t)) - 1.125) <= 1e-12


def test_only_ratio_three_gives_null_lines():
    for R in (0.5, 1.5, 2.5, 3.5, 7.0):
        assert null_defect(R, 400) > 1e-3
    assert null_defect(3.0, 400, kin.random_params(np.random.default_rng(3), 3.0)) <= 1e-12


@pytest.mark.parametrize("R", [1.0, 2.0, 3.0, 0.5, 4.25])
def test_turns_per_revolution(R):
    p = RollingLineParams.standard(R)
    assert abs(accumulated_turn(p) - 2 * math.pi * (R + 1)) <= 1e-8


def test_integer_ratio_returns_to_start():
    p = RollingLineParams(U, W, np.array([0.5, 0.5, 0.5, 0.5]), 2.0)
    end = so3_trajectory(p.u, p.v, kin.quat_to_matrix(p.q), p.R, 2 * math.pi)
    assert np.allclose(end.rot, kin.quat_to_matrix(p.q), atol=1e-12)


@pytest.mark.parametrize("R", [1.0, 3.0])
def test_nonslip(R):
    rng = np.random.default_rng(11)
    for _ in range(10):
        p = kin.random_params(rng, R)
        assert nonslip_check(p, float(rng.uniform(0, math.pi)), 1e-6) < 1e-6
        assert nonslip_check(p, float(rng.uniform(0, math.pi)), 1e-3) < 1e-4


def test_param_validation():
    with pytest.raises(ValueError):
        RollingLineParams(U, U, [1, 0, 0, 0], 3.0)
    with pytest.raises(ValueError):
        RollingLineParams(U, W, [1, 1, 0, 0], 3.0)
    with pytest.raises(ValueError):
        RollingLineParams(U, W, [1, 0, 0, 0], -1.0)


def test_quaternion_helpers():
    assert np.allclose(qmul(qexp(W, 0.3), qexp(W, 0.4)), qexp(W, 0.7))
    for q in (np.array([0.5, 0.5, 0.5, 0.5]), np.array([0.0, 0.0, 1.0, 0.0])):
        assert np.allclose(kin.quat_to_matrix(kin.matrix_to_quat(kin.quat_to_matrix(q))),
                           kin.quat_to_matrix(q))


def test_csv_round_trip():
    p = RollingLineParams.standard(3.0)
    rows = kin.simulate(p, 16)
    buf = io.StringIO()
    kin.write_csv(rows, buf)
    text = buf.getvalue()
    assert text.splitlines()[0] == ",".join(kin.CSV_HEADER)
    back = kin.read_csv(io.StringIO(text))
    assert back == rows  # 17 significant digits round-trip doubles exactly
    assert len(rows) == 17 and len(rows[0]) == 15
