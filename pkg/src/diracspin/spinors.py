"""Plane-wave Dirac spinors that diagonalise Sigma.n for a chosen axis n.

A spinor for axis ``n`` carries momentum ``p * n`` and has the block form

    u = N' ( chi,  (sigma . p n) / (E + m) chi )

with ``chi`` a Pauli eigenspinor of ``sigma . n``.  Two normalisations are
offered: ``"mass"`` with N'^2 = (E+m)/(4m), and ``"unit"`` with
N'^2 = (E+m)/(2E) so that u^dagger u = 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .clifford import _check_unit
from .errors import NonPositiveMass
from .kinematics import ScatteringFrame

NORMALIZATIONS = ("mass", "unit")


def pauli_eigenspinor(n, sign: int) -> np.ndarray:
    """Normalised chi with (sigma . n) chi = sign * chi.

    chi_+ = (cos(b/2), e^{i phi} sin(b/2)) for polar angle b and azimuth phi
    of n.  chi_- is the orthogonal state with its first nonzero component
    real and positive.
    """
    n = _check_unit(n)
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    rho = math.hypot(float(n[0]), float(n[1]))
    beta = math.atan2(rho, float(n[2]))
    c, s = math.cos(beta / 2), math.sin(beta / 2)
    phi = math.atan2(float(n[1]), float(n[0]))
    eph = complex(math.cos(phi), math.sin(phi))
    if sign == 1:
        return np.array([c, eph * s], dtype=complex)
    if s > 0:
        return np.array([s, -eph * c], dtype=complex)
    # north pole: chi_- is (0, 1) up to the phase fixed above
    return np.array([0.0, 1.0], dtype=complex)


def norm_constant(E: float, m: float, normalization: str = "mass") -> float:
    if m <= 0:
        raise NonPositiveMass(f"m = {m}: N' is undefined for m <= 0")
    if normalization == "mass":
        return math.sqrt((E + m) / (4 * m))
    if normalization == "unit":
        return math.sqrt((E + m) / (2 * E))
    raise ValueError(f"unknown normalization {normalization!r}; choose from {NORMALIZATIONS}")


@dataclass(frozen=True)
class DiracSpinor:
    components: np.ndarray
    axis: np.ndarray
    eigenvalue: int
    p: float
    m: float
    norm_const: float

    @property
    def E(self) -> float:
        return math.hypot(self.p, self.m)

    @property
    def chi(self) -> np.ndarray:
        """Upper two-spinor with N' divided out (unit norm)."""
        return self.components[:2] / self.norm_const

    def with_phase(self, phase: complex) -> "DiracSpinor":
        return DiracSpinor(self.components * phase, self.axis, self.eigenvalue, self.p, self.m, self.norm_const)


def dirac_spinor(axis, sign: int, p: float, m: float, normalization: str = "mass") -> DiracSpinor:
    """Positive-energy spinor with momentum ``p * axis`` and Sigma.axis = sign."""
    axis = _check_unit(axis)
    E = math.hypot(p, m)
    nc = norm_constant(E, m, normalization)
    chi = pauli_eigenspinor(axis, sign)
    x, y, z = p * axis / (E + m)
    lower = np.array([z * chi[0] + complex(x, -y) * chi[1], complex(x, y) * chi[0] - z * chi[1]])
    comps = nc * np.concatenate([chi, lower])
    return DiracSpinor(comps, axis, sign, float(p), float(m), nc)


def axis_spinor(frame: ScatteringFrame, axis, sign: int, normalization: str = "mass") -> DiracSpinor:
    return dirac_spinor(axis, sign, frame.p, frame.m, normalization)


def _axis_vector(frame: ScatteringFrame, axis):
    if isinstance(axis, str):
        try:
            return {
                "k": frame.k_hat,
                "q": frame.q_hat,
                "l": frame.l_hat,
                "i": frame.p_i_hat,
                "f": frame.p_f_hat,
            }[axis]
        except KeyError:
            raise ValueError(f"unknown axis label {axis!r}") from None
    return np.asarray(axis, dtype=float)


def helicity_spinor(
    frame: ScatteringFrame, which: str, sign: int, normalization: str = "mass", ref: DiracSpinor | None = None
) -> DiracSpinor:
    """Helicity state on p_i (``which="i"``) or p_f (``which="f"``), phase-locked to the frame.

    The phase is chosen so that the overlap with the k-axis state of the same
    sign is real and positive.  Under this choice
    |p_i; s> = U(l, -theta/2) |k; s> and |p_f; s> = U(l, +theta/2) |k; s>
    exactly, which is what makes matrix elements between the two helicity
    states comparable with the closed-form reduction.  ``ref`` may pass in a
    prebuilt k-axis state of the same sign.
    """
    if which not in ("i", "f"):
        raise ValueError(f"which must be 'i' or 'f', got {which!r}")
    u = axis_spinor(frame, _axis_vector(frame, which), sign, normalization)
    if ref is None:
        ref = axis_spinor(frame, frame.k_hat, sign, normalization)
    ov = np.vdot(ref.components, u.components)
    return u.with_phase(abs(ov) / ov)


def expand_in_axis(frame: ScatteringFrame, state: DiracSpinor, target_axis) -> tuple[complex, complex]:
    """Spin-space coefficients (c+, c-) of ``state`` on the +/- eigenstates of sigma.target_axis.

    Works on the Pauli (upper) part: the 4-spinors of different momenta do
    not span each other, but their spin content does.
    """
    n = _check_unit(_axis_vector(frame, target_axis))
    chi = state.chi
    return (
        complex(np.vdot(pauli_eigenspinor(n, 1), chi)),
        complex(np.vdot(pauli_eigenspinor(n, -1), chi)),
    )
