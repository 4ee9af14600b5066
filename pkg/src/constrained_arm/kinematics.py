"""Forward kinematics of a planar serial n-link arm.

Joint angles are relative (each measured from the previous link), so the
absolute orientation of link i is the cumulative sum s_i = theta_1 + ... +
theta_i.  The base sits at the origin of the task plane and the task space is
the 2-D end-effector position.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

Array = np.ndarray

TASK_DIM = 2  # planar task space; fixed


def _as_float_vector(x, name: str) -> Array:
    v = np.atleast_1d(np.asarray(x, dtype=float))
    if v.ndim != 1:
        raise ValueError(f"{name} must be a 1-D sequence, got shape {v.shape}")
    return v


@dataclass
class ArmModel:
    """Geometric and inertial description of a planar serial arm.

    Parameters
    ----------
    link_lengths : (n,) link lengths [m], all > 0
    link_masses : (n,) link masses [kg], all > 0
    com_offsets : (n,) COM distance from the proximal joint along the link [m]
    link_inertias : (n,) rotational inertia about each link COM [kg m^2], >= 0
    gravity : (2,) gravitational acceleration in the task plane [m/s^2]
    """

    link_lengths: Array
    link_masses: Array
    com_offsets: Array
    link_inertias: Array
    gravity: Array = field(default_factory=lambda: np.array([0.0, -9.81]))

    def __post_init__(self):
        self.link_lengths = _as_float_vector(self.link_lengths, "link_lengths")
        self.link_masses = _as_float_vector(self.link_masses, "link_masses")
        self.com_offsets = _as_float_vector(self.com_offsets, "com_offsets")
        self.link_inertias = _as_float_vector(self.link_inertias, "link_inertias")
        self.gravity = _as_float_vector(self.gravity, "gravity")

        n = self.link_lengths.size
        for name in ("link_masses", "com_offsets", "link_inertias"):
            if getattr(self, name).size != n:
                raise ValueError(f"{name} has {getattr(self, name).size} entries, expected {n}")
        if self.gravity.size != TASK_DIM:
            raise ValueError(f"gravity must have {TASK_DIM} components")
        if n < TASK_DIM:
            raise ValueError(f"need at least {TASK_DIM} joints for a {TASK_DIM}-D task space, got {n}")
        if not np.all(self.link_lengths > 0):
            raise ValueError("link lengths must be strictly positive")
        if not np.all(self.link_masses > 0):
            raise ValueError("link masses must be strictly positive")
        if not np.all(self.link_inertias >= 0):
            raise ValueError("link inertias must be non-negative")
        if np.any(self.com_offsets < 0) or np.any(self.com_offsets > self.link_lengths):
            raise ValueError("com_offsets must lie within [0, link_length] for each link")
        if not np.all(np.isfinite(self.gravity)):
            raise ValueError("gravity must be finite")

    @property
    def n(self) -> int:
        return self.link_lengths.size

    @property
    def p(self) -> int:
        return TASK_DIM

    @property
    def reach(self) -> float:
        """Maximum end-effector distance from the base [m]."""
        return float(self.link_lengths.sum())

    @classmethod
    def uniform_rods(cls, link_lengths, link_masses, gravity=(0.0, -9.81),
                     rotor_inertia=0.0) -> "ArmModel":
        """Build an arm of uniform slender rods (COM at mid-length, inertia
        m l^2 / 12) plus an optional reflected actuator inertia per joint.

        `rotor_inertia` is a scalar or per-joint array added to each link's
        rotational inertia; geared drives commonly dominate the link term.
        """
        lengths = _as_float_vector(link_lengths, "link_lengths")
        masses = _as_float_vector(link_masses, "link_masses")
        inertias = masses * lengths**2 / 12.0 + np.asarray(rotor_inertia, dtype=float)
        return cls(
            link_lengths=lengths,
            link_masses=masses,
            com_offsets=lengths / 2.0,
            link_inertias=inertias,
            gravity=np.asarray(gravity, dtype=float),
        )


@dataclass
class JointState:
    """Joint positions and velocities (theta [rad], theta_dot [rad/s])."""

    theta: Array
    theta_dot: Array

    def __post_init__(self):
        self.theta = _as_float_vector(self.theta, "theta")
        self.theta_dot = _as_float_vector(self.theta_dot, "theta_dot")
        if self.theta.size != self.theta_dot.size:
            raise ValueError(
                f"theta has {self.theta.size} entries but theta_dot has {self.theta_dot.size}"
            )
        if not (np.all(np.isfinite(self.theta)) and np.all(np.isfinite(self.theta_dot))):
            raise ValueError("joint state entries must be finite")


def _check_dims(state: JointState, model: ArmModel) -> None:
    if state.theta.size != model.n:
        raise ValueError(f"state has {state.theta.size} joints, model has {model.n}")


def _trig(theta: Array):
    """Cumulative link angles and their cos/sin."""
    s = np.cumsum(theta)
    return s, np.cos(s), np.sin(s)


def _tail_sum(v: Array) -> Array:
    """out[k] = sum_{j >= k} v[j]."""
    return np.cumsum(v[::-1])[::-1]


def _position(lengths: Array, cs: Array, sn: Array) -> Array:
    return np.array([lengths @ cs, lengths @ sn])


def _jacobian(lengths: Array, cs: Array, sn: Array) -> Array:
    # dx/dtheta_k = -sum_{j>=k} l_j sin s_j ;  dy/dtheta_k = sum_{j>=k} l_j cos s_j
    return np.vstack([-_tail_sum(lengths * sn), _tail_sum(lengths * cs)])


def forward_kinematics(state: JointState, model: ArmModel) -> Array:
    """End-effector position X = (sum l_i cos s_i, sum l_i sin s_i)."""
    _check_dims(state, model)
    _, cs, sn = _trig(state.theta)
    return _position(model.link_lengths, cs, sn)


def jacobian(state: JointState, model: ArmModel) -> Array:
    """Task Jacobian J (p x n), rows d(x)/d(theta) and d(y)/d(theta).

    Rank is not enforced here; singular configurations (all links collinear)
    yield a rank-deficient J and are monitored by the simulator instead.
    """
    _check_dims(state, model)
    _, cs, sn = _trig(state.theta)
    return _jacobian(model.link_lengths, cs, sn)


def jacobian_dot(state: JointState, model: ArmModel) -> Array:
    """Time derivative of the Jacobian along the current joint velocity.

    Entry-wise: d/dt J[0,k] = -sum_{j>=k} l_j cos(s_j) sdot_j and
    d/dt J[1,k] = -sum_{j>=k} l_j sin(s_j) sdot_j, with sdot the cumulative
    joint rates.  Together with J it reconstructs the task acceleration
    exactly: Xddot = Jdot @ theta_dot + J @ theta_ddot.
    """
    _check_dims(state, model)
    _, cs, sn = _trig(state.theta)
    s_dot = np.cumsum(state.theta_dot)
    l = model.link_lengths
    return np.vstack([-_tail_sum(l * cs * s_dot), -_tail_sum(l * sn * s_dot)])
