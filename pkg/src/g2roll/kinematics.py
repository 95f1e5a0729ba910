"""Rolling-ball kinematics for an arbitrary radius ratio ``R``.

Three configuration spaces appear here:

* ``S^2 x SO(3)``: contact direction and ball orientation (``ContactConfig``),
* ``S^2 x SU(2)``: its double cover (``SpinorConfig``),
* ``RP^2 x SU(2)``: the spinorial ball on a projective plane
  (``ProjectiveConfig``), identified with the projective lightcone by ``tau``.

This is the only floating-point module.  Quaternions are numpy arrays in
``(w, x, y, z)`` order; imaginary quaternions double as 3-vectors.
"""
from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence

import numpy as np

UNIT_TOL = 1e-12
ORTHO_TOL = 1e-10
SIGNATURE = np.array([1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0])

CSV_HEADER = (["theta", "contact_x", "contact_y", "contact_z",
               "q_w", "q_x", "q_y", "q_z"]
              + [f"n{k}" for k in range(1, 8)])


# --- quaternion helpers -----------------------------------------------------

def qmul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Hamilton product; broadcasts over leading axes."""
    p, q = np.asarray(p, float), np.asarray(q, float)
    pw, px, py, pz = np.moveaxis(p, -1, 0)
    qw, qx, qy, qz = np.moveaxis(q, -1, 0)
    return np.stack([pw * qw - px * qx - py * qy - pz * qz,
                     pw * qx + px * qw + py * qz - pz * qy,
                     pw * qy - px * qz + py * qw + pz * qx,
                     pw * qz + px * qy - py * qx + pz * qw], axis=-1)


def qconj(q: np.ndarray) -> np.ndarray:
    q = np.asarray(q, float)
    return q * np.array([1.0, -1.0, -1.0, -1.0])


def pure(v: Sequence[float]) -> np.ndarray:
    v = np.asarray(v, float)
    return np.concatenate([np.zeros(v.shape[:-1] + (1,)), v], axis=-1)


def qexp(w: Sequence[float], alpha) -> np.ndarray:
    """``exp(alpha w) = cos(alpha) + sin(alpha) w`` for a unit 3-vector ``w``.

    ``alpha`` may be an array, giving one quaternion per entry.
    """
    w = np.asarray(w, float)
    alpha = np.asarray(alpha, float)[..., None]
    return np.concatenate([np.cos(alpha), np.sin(alpha) * w], axis=-1)


def quat_to_matrix(q: Sequence[float]) -> np.ndarray:
    """Rotation ``v -> q v conj(q)`` of a unit quaternion."""
    w, x, y, z = np.asarray(q, float)
    return np.array([
        [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
        [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
        [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
    ])


def matrix_to_quat(m: np.ndarray) -> np.ndarray:
    """A unit quaternion for a rotation matrix (sign chosen with ``w >= 0``)."""
    m = np.asarray(m, float)
    tr = np.trace(m)
    if tr > 0:
        s = 2.0 * math.sqrt(tr + 1.0)
        q = [0.25 * s, (m[2, 1] - m[1, 2]) / s, (m[0, 2] - m[2, 0]) / s, (m[1, 0] - m[0, 1]) / s]
    else:
        i = int(np.argmax(np.diag(m)))
        j, k = (i + 1) % 3, (i + 2) % 3
        s = 2.0 * math.sqrt(1.0 + m[i, i] - m[j, j] - m[k, k])
        q = [0.0] * 4
        q[0] = (m[k, j] - m[j, k]) / s
        q[1 + i] = 0.25 * s
        q[1 + j] = (m[j, i] + m[i, j]) / s
        q[1 + k] = (m[k, i] + m[i, k]) / s
    q = np.array(q)
    return q if q[0] >= 0 else -q


def axis_angle(axis: Sequence[float], angle: float) -> np.ndarray:
    """``Ro(axis, angle)`` as a matrix."""
    return quat_to_matrix(qexp(axis, angle / 2.0))


def _unit(v, name: str, tol: float = UNIT_TOL) -> np.ndarray:
    v = np.asarray(v, float)
    n = np.linalg.norm(v)
    if abs(n - 1.0) > tol:
        raise ValueError(f"{name} must have unit norm, got {n!r}")
    return v


SIGN_TOL = 1e-9


def canonical_sign(v: np.ndarray) -> np.ndarray:
    """``v`` or ``-v``, whichever has a positive first nonzero entry.

    Entries below ``SIGN_TOL`` count as zero so rounding noise cannot flip
    the choice.
    """
    for c in v:
        if abs(c) > SIGN_TOL:
            return v if c > 0 else -v
    return v


# --- configurations ---------------------------------------------------------

@dataclass(frozen=True)
class RollingLineParams:
    """Initial data of a rolling trajectory with radius ratio ``R``."""

    u: np.ndarray
    w: np.ndarray
    q: np.ndarray
    R: float

    def __post_init__(self):
        u = _unit(self.u, "u")
        w = _unit(self.w, "w")
        q = _unit(self.q, "q")
        if u.shape != (3,) or w.shape != (3,) or q.shape != (4,):
            raise ValueError("u and w are 3-vectors, q is a quaternion")
        if abs(float(u @ w)) > UNIT_TOL:
            raise ValueError("u and w must be orthogonal")
        if not self.R > 0:
            raise ValueError("radius ratio must be positive")
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "w", w)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "R", float(self.R))

    @property
    def v(self) -> np.ndarray:
        """``v = w u``, the second direction of the great circle."""
        return qmul(pure(self.w), pure(self.u))[1:]

    @staticmethod
    def standard(R: float) -> "RollingLineParams":
        return RollingLineParams(np.array([1.0, 0, 0]), np.array([0, 0, 1.0]),
                                 np.array([1.0, 0, 0, 0]), R)


@dataclass(frozen=True)
class ContactConfig:
    v: np.ndarray
    rot: np.ndarray

    def __post_init__(self):
        v = _unit(self.v, "contact direction", ORTHO_TOL)
        rot = np.asarray(self.rot, float)
        if (rot.shape != (3, 3) or np.abs(rot.T @ rot - np.eye(3)).max() > ORTHO_TOL
                or abs(np.linalg.det(rot) - 1.0) > ORTHO_TOL):
            raise ValueError("rot must be a rotation matrix")
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "rot", rot)


@dataclass(frozen=True)
class SpinorConfig:
    v: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "v", _unit(self.v, "v"))
        object.__setattr__(self, "q", _unit(self.q, "q"))


@dataclass(frozen=True)
class ProjectiveConfig:
    """``(+-v, q)``, stored with the canonical sign of ``v``."""

    v: np.ndarray
    q: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "v", canonical_sign(_unit(self.v, "v")))
        object.__setattr__(self, "q", _unit(self.q, "q"))


@dataclass(frozen=True)
class NullRay:
    """A null 7-vector up to sign, stored with a positive leading entry."""

    vec: np.ndarray = field()

    def __post_init__(self):
        vec = np.asarray(self.vec, float)
        if vec.shape != (7,):
            raise ValueError("a null ray is a 7-vector")
        object.__setattr__(self, "vec", canonical_sign(vec))

    @property
    def first(self) -> np.ndarray:
        return self.vec[:3]

    @property
    def second(self) -> np.ndarray:
        return self.vec[3:]

    def q_value(self) -> float:
        return float(self.vec @ (SIGNATURE * self.vec))


def null_vector(first: np.ndarray, second: np.ndarray) -> np.ndarray:
    """``(imaginary quaternion, quaternion)`` as an imaginary split octonion."""
    return np.concatenate([np.asarray(first, float)[-3:], np.asarray(second, float)])


# --- trajectories -----------------------------------------------------------

def so3_trajectory(u, v, g, R: float, phi: float) -> ContactConfig:
    """Contact ``cos(phi) u + sin(phi) v``, orientation ``Ro(u x v, (1+R) phi) g``."""
    u, v = _unit(u, "u"), _unit(v, "v")
    if abs(float(u @ v)) > UNIT_TOL:
        raise ValueError("u and v must be orthogonal")
    axis = np.cross(u, v)
    rot = axis_angle(axis, (1.0 + R) * phi) @ np.asarray(g, float)
    return ContactConfig(math.cos(phi) * u + math.sin(phi) * v, rot)


def su2_trajectory(p: RollingLineParams, theta: float) -> SpinorConfig:
    """``(exp(2 theta w) u, exp((R+1) theta w) q)``."""
    v = qmul(qexp(p.w, 2.0 * theta), pure(p.u))[1:]
    q = qmul(qexp(p.w, (p.R + 1.0) * theta), p.q)
    return SpinorConfig(v, q)


def pc_vector(p: RollingLineParams, theta):
    """Representative ``(exp(2 theta w) u, exp(-(R-1) theta w) u q)``.

    Accepts an array of angles and then returns one row per angle.
    """
    uq = qmul(pure(p.u), p.q)
    first = qmul(qexp(p.w, 2.0 * np.asarray(theta, float)), pure(p.u))
    second = qmul(qexp(p.w, -(p.R - 1.0) * np.asarray(theta, float)), uq)
    return np.concatenate([first[..., 1:], second], axis=-1)


def pc_trajectory(p: RollingLineParams, theta: float) -> NullRay:
    return NullRay(pc_vector(p, theta))


# --- covering maps and tau --------------------------------------------------

def double_cover(c: SpinorConfig) -> ContactConfig:
    return ContactConfig(c.v, quat_to_matrix(c.q))


def projectivize(c: SpinorConfig) -> ProjectiveConfig:
    return ProjectiveConfig(c.v, c.q)


def tau(c: ProjectiveConfig) -> NullRay:
    """``(+-v, q) -> +-(v, v q)``."""
    return NullRay(null_vector(c.v, qmul(pure(c.v), c.q)))


def tau_inv(x: NullRay) -> ProjectiveConfig:
    """Inverse of ``tau``: ``q = v^-1 (v q) = -v (v q)`` for unit imaginary ``v``."""
    v = x.first
    return ProjectiveConfig(v, -qmul(pure(v), x.second))


def cover_residual(p: RollingLineParams, theta: float) -> float:
    """How far the covering square fails to commute at ``theta``.

    Compares the double cover of the spinor trajectory with the SO(3)
    trajectory at ``phi = 2 theta``, and ``tau`` of its projectivization with
    the lightcone trajectory.
    """
    s = su2_trajectory(p, theta)
    direct = so3_trajectory(p.u, p.v, quat_to_matrix(p.q), p.R, 2.0 * theta)
    covered = double_cover(s)
    r1 = max(np.abs(covered.v - direct.v).max(), np.abs(covered.rot - direct.rot).max())
    r2 = np.abs(tau(projectivize(s)).vec - pc_trajectory(p, theta).vec).max()
    return float(max(r1, r2))


# --- the 1:3 criterion -------------------------------------------------------

def null_defect(R: float, grid_size: int = 1000,
                params: Optional[RollingLineParams] = None) -> float:
    """Largest ``|x(t1) . x(t2)|`` over pairs of a ``theta`` grid on ``[0, pi/2]``.

    The points of one trajectory span a null subspace exactly when this is 0.
    Pointwise the value is ``cos(2 d) - cos((1 - R) d)`` with ``d = t1 - t2``.
    """
    if not R > 0:
        raise ValueError("radius ratio must be positive")
    if grid_size < 100:
        raise ValueError("grid_size must be at least 100")
    p = params if params is not None else RollingLineParams.standard(R)
    if p.R != R:
        p = RollingLineParams(p.u, p.w, p.q, R)
    thetas = np.linspace(0.0, math.pi / 2.0, grid_size)
    xs = pc_vector(p, thetas)
    gram = xs @ (SIGNATURE[:, None] * xs.T)
    return float(np.abs(gram).max())


def defect_closed_form(R: float, delta):
    return np.cos(2.0 * np.asarray(delta)) - np.cos((1.0 - R) * np.asarray(delta))


def line_span_residual(p: RollingLineParams, theta: float) -> float:
    """Distance from ``x(theta)`` to ``span{(u, uq), (wu, -wuq)}``."""
    uq = qmul(pure(p.u), p.q)
    wu = qmul(pure(p.w), pure(p.u))
    b1 = null_vector(pure(p.u), uq)
    b2 = null_vector(wu, -qmul(wu, p.q))
    basis = np.stack([b1, b2], axis=1)
    x = pc_vector(p, theta)
    coef, *_ = np.linalg.lstsq(basis, x, rcond=None)
    return float(np.abs(basis @ coef - x).max())


# --- rolling without slipping -------------------------------------------------

def _rotation_at(p: RollingLineParams, phi: float) -> np.ndarray:
    return axis_angle(np.cross(p.u, p.v), (1.0 + p.R) * phi) @ quat_to_matrix(p.q)


def angular_velocity(p: RollingLineParams, phi: float, h: float = 1e-6) -> np.ndarray:
    """Spatial angular velocity ``d rot/d phi * rot^T`` by central differences."""
    dr = (_rotation_at(p, phi + h) - _rotation_at(p, phi - h)) / (2.0 * h)
    omega = dr @ _rotation_at(p, phi).T
    return np.array([omega[2, 1] - omega[1, 2], omega[0, 2] - omega[2, 0],
                     omega[1, 0] - omega[0, 1]]) / 2.0


def nonslip_check(p: RollingLineParams, theta: float, h: float = 1e-6) -> float:
    """Deviation of the measured angular velocity from ``(R+1) dphi`` about ``u x v``.

    Time is the contact angle ``phi = 2 theta``, so the predicted angular
    velocity is ``(R + 1)`` times the unit axis ``u x v``.
    """
    measured = angular_velocity(p, 2.0 * theta, h)
    predicted = (p.R + 1.0) * np.cross(p.u, p.v)
    return float(np.linalg.norm(measured - predicted))


def accumulated_turn(p: RollingLineParams, steps: int = 1000, revolutions: float = 1.0) -> float:
    """Unwrapped rotation angle of the ball while the contact circles ``revolutions`` times.

    Sums the signed angles of consecutive relative rotations, read off from
    the quaternion logarithm about the rolling axis.
    """
    axis = np.cross(p.u, p.v)
    base = quat_to_matrix(p.q)
    phis = np.linspace(0.0, 2.0 * math.pi * revolutions, steps + 1)
    quats = [matrix_to_quat(_rotation_at(p, phi) @ base.T) for phi in phis]
    total = 0.0
    for a, b in zip(quats, quats[1:]):
        d = qmul(b, qconj(a))
        if d[0] < 0:
            d = -d
        angle = 2.0 * math.atan2(np.linalg.norm(d[1:]), d[0])
        total += math.copysign(angle, float(d[1:] @ axis)) if angle else 0.0
    return total


# --- export -------------------------------------------------------------------

def simulate(p: RollingLineParams, steps: int, theta_max: float = math.pi) -> List[List[float]]:
    """Rows ``theta, contact, spinor quaternion, null vector`` on a uniform grid."""
    if steps < 1:
        raise ValueError("steps must be positive")
    rows = []
    for theta in np.linspace(0.0, theta_max, steps + 1):
        s = su2_trajectory(p, float(theta))
        x = pc_vector(p, float(theta))
        rows.append([float(theta)] + list(s.v) + list(s.q) + list(x))
    return rows


def write_csv(rows: Iterable[Sequence[float]], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([format(float(c), ".17g") for c in row])


def read_csv(stream) -> List[List[float]]:
    reader = csv.reader(stream)
    header = next(reader)
    if header != CSV_HEADER:
        raise ValueError("unexpected trajectory header")
    return [[float(c) for c in row] for row in reader]


def random_params(rng: np.random.Generator, R: Optional[float] = None) -> RollingLineParams:
    """Uniformly random orthonormal ``u, w`` and unit ``q``."""
    while True:
        a, b = rng.normal(size=3), rng.normal(size=3)
        u = a / np.linalg.norm(a)
        b = b - (b @ u) * u
        if np.linalg.norm(b) > 1e-3:
            break
    w = b / np.linalg.norm(b)
    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    return RollingLineParams(u, w, q, float(rng.uniform(0.2, 6.0)) if R is None else R)
