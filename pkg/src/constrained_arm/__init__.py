"""Simulation and analysis of a planar n-link arm tracking a constrained
trajectory under a robust task-space position/force law with uncertain
environment stiffness.

Submodules
----------
kinematics   forward kinematics, Jacobian, Jacobian rate
dynamics     inertia / Coriolis / gravity terms, forward dynamics
environment  linear-spring contact force with stiffness uncertainty
trajectory   circular reference motion and its time scaling
controller   the robust control law and its gain feasibility check
simulator    closed-loop fixed-step integration, trace logging
analysis     Lyapunov monitors, tracking metrics, robustness sweeps
oracles      independent numerical oracles used for verification
config       experiment-file loading with unit-suffixed keys
cli          command-line front end (simulate / check-gains / sweep / verify)
"""

from .kinematics import ArmModel, JointState, forward_kinematics, jacobian, jacobian_dot
from .dynamics import DynamicsTerms, dynamics_terms, forward_dynamics, kinetic_energy
from .environment import EnvironmentModel, contact_force
from .trajectory import TaskTarget, TrajectoryConfig, time_scaling, circle_target, target_at
from .controller import ControllerGains, FeasibilityReport, sigma, control_torque, check_gain_conditions
from .simulator import SimConfig, Trace, SimulationDiverged, step, run

__version__ = "0.1.0"
