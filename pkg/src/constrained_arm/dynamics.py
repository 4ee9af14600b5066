"""Lagrangian rigid-body dynamics of the planar arm.

Internally the kinetic energy is assembled in absolute link angles
s = cumsum(theta), where the inertia matrix takes the compact form

    Ms(s) = Q(s) * S + diag(I),    Q_ab = cos(s_a - s_b),

with the constant coupling matrix S built from link masses and COM levers.
Joint-space quantities follow by the congruence M = T' Ms T with T the
lower-triangular ones matrix (s = T theta).  The centrifugal/Coriolis vector
collapses in absolute angles to hs_a = sum_b S_ab sin(s_a - s_b) sdot_b^2,
which the integrator uses directly; the public `dynamics_terms` instead
builds the Christoffel matrix C so that skew-symmetry of (Mdot - 2C) is an
explicit, testable property.  The two Coriolis forms agree as vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .kinematics import ArmModel, JointState, _check_dims, _trig

Array = np.ndarray


class _Context:
    """Constant arrays derived from an ArmModel, reused across a run."""

    def __init__(self, model: ArmModel):
        n = model.n
        l, m, c = model.link_lengths, model.link_masses, model.com_offsets
        # W[i, j]: lever of absolute angle j in the COM position of link i
        W = np.zeros((n, n))
        for i in range(n):
            W[i, :i] = l[:i]
            W[i, i] = c[i]
        self.n = n
        self.lengths = l
        self.S = W.T @ (m[:, None] * W)   # mass coupling, constant
        self.mu = m @ W                    # gravity levers, constant
        self.inertias = model.link_inertias
        self.T = np.tril(np.ones((n, n)))  # s = T theta
        self.gravity = model.gravity

    def abs_terms(self, cs: Array, sn: Array, s_dot: Array):
        """Inertia, centrifugal and gravity terms in absolute angles."""
        Ms = (np.outer(cs, cs) + np.outer(sn, sn)) * self.S
        Ms[np.diag_indices(self.n)] += self.inertias
        R = np.outer(sn, cs) - np.outer(cs, sn)   # R_ab = sin(s_a - s_b)
        hs = (R * self.S) @ (s_dot * s_dot)
        gx, gy = self.gravity
        gs = -self.mu * (gy * cs - gx * sn)        # d(potential)/d(s)
        return Ms, hs, gs


def _upper_diff(v: Array) -> Array:
    """Apply inv(T') : out_a = v_a - v_{a+1}."""
    out = v.copy()
    out[:-1] -= v[1:]
    return out


def _lower_diff(v: Array) -> Array:
    """Apply inv(T) : out_a = v_a - v_{a-1}."""
    out = v.copy()
    out[1:] -= v[:-1]
    return out


def _solve_accel(Ms: Array, hs: Array, gs: Array, net: Array, theta: Array) -> Array:
    """Joint accelerations from net = U - J'F via the SPD solve in absolute
    coordinates: Ms (T thetaddot) = inv(T') net - hs - gs."""
    rhs = _upper_diff(net) - hs - gs
    try:
        xi = cho_solve(cho_factor(Ms, lower=True, check_finite=False), rhs,
                       check_finite=False)
    except np.linalg.LinAlgError as exc:
        raise RuntimeError(
            f"inertia matrix is not positive definite at theta={theta!r}"
        ) from exc
    return _lower_diff(xi)


@dataclass
class DynamicsTerms:
    """Closed-form manipulator terms at one state.

    M : (n, n) inertia matrix, symmetric positive definite
    C_mat : (n, n) Coriolis matrix in Christoffel form, H = C_mat @ theta_dot
    H : (n,) centrifugal/Coriolis vector [N m]
    G : (n,) gravity vector [N m]
    """

    M: Array
    C_mat: Array
    H: Array
    G: Array


def _inertia_partials(ctx: _Context, cs: Array, sn: Array) -> Array:
    """dM[r] = dM/dtheta_r, exact, shape (n, n, n)."""
    T = ctx.T
    R = np.outer(sn, cs) - np.outer(cs, sn)
    # dQ[r,a,b] = -sin(s_a - s_b) * ([r<=a] - [r<=b]) = R_ab (T[b,r] - T[a,r])
    Tt = T.T
    dQ = R[None, :, :] * (Tt[:, None, :] - Tt[:, :, None])
    dA = dQ * ctx.S[None, :, :]
    return np.einsum('aj,rab,bk->rjk', T, dA, T)


def dynamics_terms(state: JointState, model: ArmModel) -> DynamicsTerms:
    """Inertia matrix, Christoffel Coriolis matrix, and gravity vector.

    C_mat is built from the Christoffel symbols of M,
    c_ijk = (dM_ij/dq_k + dM_ik/dq_j - dM_jk/dq_i) / 2, which guarantees that
    Mdot - 2 C_mat is skew-symmetric.
    """
    _check_dims(state, model)
    ctx = _Context(model)
    _, cs, sn = _trig(state.theta)
    s_dot = np.cumsum(state.theta_dot)
    Ms, hs, gs = ctx.abs_terms(cs, sn, s_dot)
    T = ctx.T
    M = T.T @ Ms @ T
    G = T.T @ gs

    td = state.theta_dot
    dM = _inertia_partials(ctx, cs, sn)
    Mdot = np.tensordot(td, dM, axes=(0, 0))
    # C[i,j] = sum_k c_ijk td_k with dM[r,i,j] = dM_ij/dq_r
    C = 0.5 * (Mdot + np.einsum('jik,k->ij', dM, td) - np.einsum('ijk,k->ij', dM, td))
    H = C @ td
    return DynamicsTerms(M=M, C_mat=C, H=H, G=G)


def inertia_rate(state: JointState, model: ArmModel) -> Array:
    """Mdot = sum_r (dM/dtheta_r) theta_dot_r, exact."""
    _check_dims(state, model)
    ctx = _Context(model)
    _, cs, sn = _trig(state.theta)
    dM = _inertia_partials(ctx, cs, sn)
    return np.tensordot(state.theta_dot, dM, axes=(0, 0))


def forward_dynamics(state: JointState, U: Array, F: Array, model: ArmModel) -> Array:
    """Joint accelerations from M thetaddot = U - J'F - H - G.

    The linear system is solved by Cholesky factorization (never an explicit
    inverse); a numerically non-SPD inertia matrix raises with the offending
    configuration in the message.
    """
    from .kinematics import _jacobian  # local to avoid import clutter at top

    _check_dims(state, model)
    U = np.asarray(U, dtype=float)
    F = np.asarray(F, dtype=float)
    if U.shape != (model.n,):
        raise ValueError(f"U must have shape ({model.n},), got {U.shape}")
    if F.shape != (model.p,):
        raise ValueError(f"F must have shape ({model.p},), got {F.shape}")

    ctx = _Context(model)
    _, cs, sn = _trig(state.theta)
    s_dot = np.cumsum(state.theta_dot)
    Ms, hs, gs = ctx.abs_terms(cs, sn, s_dot)
    J = _jacobian(model.link_lengths, cs, sn)
    return _solve_accel(Ms, hs, gs, U - J.T @ F, state.theta)


def kinetic_energy(state: JointState, model: ArmModel) -> float:
    """T = theta_dot' M theta_dot / 2  [J]."""
    _check_dims(state, model)
    ctx = _Context(model)
    _, cs, sn = _trig(state.theta)
    s_dot = np.cumsum(state.theta_dot)
    Ms = (np.outer(cs, cs) + np.outer(sn, sn)) * ctx.S
    Ms[np.diag_indices(ctx.n)] += ctx.inertias
    return 0.5 * float(s_dot @ Ms @ s_dot)
