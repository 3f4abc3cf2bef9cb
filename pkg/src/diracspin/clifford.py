"""Dirac-representation gamma matrices, spin matrices and SU(2) rotations.

Everything here is a plain ``numpy`` array of shape ``(4, 4)`` (or ``(..., 4, 4)``
when a stack of unit vectors is passed).  The representation is fixed to the
standard Dirac one::

    gamma^0 = diag(I, -I)     gamma^i = [[0, s_i], [-s_i, 0]]
    gamma5  = [[0, I], [I, 0]]
    Sigma_i = diag(s_i, s_i)  alpha_i = gamma5 Sigma_i = gamma^0 gamma^i

With ``gamma_4 = gamma^0`` the product ``gamma_1 gamma_2 gamma_3 gamma_4``
equals ``i gamma5`` exactly, so no extra phase bookkeeping is needed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonUnitVector

UNIT_TOL = 1e-12

PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
I2 = np.eye(2, dtype=complex)
I4 = np.eye(4, dtype=complex)
_Z2 = np.zeros((2, 2), dtype=complex)

METRIC = np.diag([1.0, -1.0, -1.0, -1.0])

GAMMA = np.array(
    [np.block([[I2, _Z2], [_Z2, -I2]])]
    + [np.block([[_Z2, s], [-s, _Z2]]) for s in PAULI]
)
GAMMA5 = np.block([[_Z2, I2], [I2, _Z2]])
SIGMA = np.array([np.block([[s, _Z2], [_Z2, s]]) for s in PAULI])
ALPHA = np.array([GAMMA[0] @ g for g in GAMMA[1:]])

for _a in (GAMMA, GAMMA5, SIGMA, ALPHA):
    _a.setflags(write=False)


def _check_unit(n, tol=UNIT_TOL):
    n = np.asarray(n, dtype=float)
    if n.shape[-1] != 3:
        raise ValueError(f"expected 3-vector(s), got shape {n.shape}")
    if n.ndim == 1:
        dev = abs(math.sqrt(float(n @ n)) - 1.0)
        if not dev <= tol:
            raise NonUnitVector(f"| |n| - 1 | = {dev:.3e} exceeds {tol:g}")
        return n
    dev = np.abs(np.linalg.norm(n, axis=-1) - 1.0)
    if np.any(dev > tol):
        raise NonUnitVector(f"| |n| - 1 | = {np.max(dev):.3e} exceeds {tol:g}")
    return n


def gamma(mu: int) -> np.ndarray:
    """gamma^mu for mu in 0..3 (upper index, signature +,-,-,-)."""
    return GAMMA[mu]


def gamma5() -> np.ndarray:
    return GAMMA5


def pauli_dot(n) -> np.ndarray:
    """sigma . n as a 2x2 matrix; ``n`` may be complex and need not be unit."""
    n = np.asarray(n)
    if n.ndim == 1:
        x, y, z = n
        return np.array([[z, x - 1j * y], [x + 1j * y, -z]], dtype=complex)
    return np.tensordot(n, PAULI, axes=([-1], [0]))


def _block_diag2(m2):
    out = np.zeros((4, 4), dtype=complex)
    out[:2, :2] = m2
    out[2:, 2:] = m2
    return out


def sigma_dot(n) -> np.ndarray:
    """Sigma . n for a real unit vector (or a stack of them)."""
    n = _check_unit(n)
    if n.ndim == 1:
        return _block_diag2(pauli_dot(n))
    return np.tensordot(n, SIGMA, axes=([-1], [0]))


def sigma_dot_any(v) -> np.ndarray:
    """Sigma . v with no normalization check; ``v`` may be complex."""
    v = np.asarray(v)
    if v.ndim == 1:
        return _block_diag2(pauli_dot(v))
    return np.tensordot(v, SIGMA, axes=([-1], [0]))


def rotation(n, angle) -> np.ndarray:
    """Spin rotation U(n, angle) = exp(-i angle Sigma.n / 2).

    Closed form cos(angle/2) I - i sin(angle/2) Sigma.n, exact because
    (Sigma.n)^2 = I.  Conjugation acts actively on spin operators:
    U (Sigma.v) U^-1 = Sigma.(R v) with R the rotation by ``angle`` about ``n``.
    """
    s = sigma_dot(n)
    angle = np.asarray(angle, dtype=float)[..., None, None]
    return np.cos(angle / 2) * I4 - 1j * np.sin(angle / 2) * s


def dagger(m: np.ndarray) -> np.ndarray:
    return np.swapaxes(np.conj(m), -1, -2)


def commutator(a, b):
    return a @ b - b @ a


def anticommutator(a, b):
    return a @ b + b @ a


def maxdev(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def clifford_deviation() -> float:
    """Largest entrywise error in {gamma^mu, gamma^nu} = 2 g^{mu nu} I."""
    worst = 0.0
    for mu in range(4):
        for nu in range(4):
            target = 2 * METRIC[mu, nu] * I4
            worst = max(worst, maxdev(anticommutator(GAMMA[mu], GAMMA[nu]), target))
    return worst


@dataclass(frozen=True)
class GeneratorTriple:
    """Sigma projected on the intrinsic axes (k, q, l)."""

    sigma_k: np.ndarray
    sigma_q: np.ndarray
    sigma_l: np.ndarray

    @classmethod
    def from_frame(cls, frame) -> "GeneratorTriple":
        return cls(sigma_dot(frame.k_hat), sigma_dot(frame.q_hat), sigma_dot(frame.l_hat))


def check_algebra(frame) -> dict[str, float]:
    """Max absolute deviation for every operator identity on one frame.

    ``frame`` may also be a ``kinematics.FrameBatch``; the identities are then
    checked on all frames at once and the maximum over the batch is reported.
    Keys name the identity; every value should be at roundoff level.
    """
    g = GeneratorTriple.from_frame(frame)
    sk, sq, sl = g.sigma_k, g.sigma_q, g.sigma_l
    si, sf = sigma_dot(frame.p_i_hat), sigma_dot(frame.p_f_hat)
    half = np.asarray(frame.theta, dtype=float)[..., None, None] / 2
    c, s = np.cos(half), np.sin(half)
    g5 = GAMMA5

    out = {"clifford": clifford_deviation()}
    out["su2_commutators"] = max(
        maxdev(commutator(sk, sq), 2j * sl),
        maxdev(commutator(sl, sk), 2j * sq),
        maxdev(commutator(sq, sl), 2j * sk),
    )
    out["su2_anticommutators"] = max(
        maxdev(anticommutator(sl, sk), 0),
        maxdev(anticommutator(sq, sl), 0),
        maxdev(anticommutator(sq, sk), 0),
    )
    out["squares"] = max(maxdev(x @ x, I4) for x in (sk, sq, sl))
    out["products"] = max(
        maxdev(1j * sk, sq @ sl),
        maxdev(1j * sq, sl @ sk),
        maxdev(1j * sl, sk @ sq),
    )
    out["gamma5_commutes"] = max(maxdev(commutator(g5, x), 0) for x in (sk, sq, sl))
    out["helicity_in_kq"] = max(
        maxdev(si, c * sk - s * sq),
        maxdev(sf, c * sk + s * sq),
    )
    u = rotation(frame.l_hat, frame.theta)
    out["helicity_rotation"] = maxdev(u @ si @ dagger(u), sf)
    out["sandwich_k"] = maxdev(sf @ sk @ si, sk)
    out["sandwich_q"] = maxdev(sf @ sq @ si, -sq)
    theta = np.asarray(frame.theta, dtype=float)
    u_half = rotation(frame.l_hat, theta / 2)
    u_mhalf = rotation(frame.l_hat, -theta / 2)
    out["gamma5_sigma_k_rotation"] = maxdev(dagger(u_half) @ g5 @ sk @ u_mhalf, g5 @ sk)
    worst = 0.0
    for h in (1, -1):
        proj = (I4 + h * si) / 2
        lhs = sf @ sl @ si @ proj
        rhs = h * 1j * (-c * sq + s * sk) @ proj
        worst = max(worst, maxdev(lhs, rhs))
    out["sigma_l_sandwich"] = worst
    return out
