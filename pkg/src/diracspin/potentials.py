"""Static vector potentials given by their Fourier transforms A(q).

Each potential exposes ``fourier_amplitude(q)`` (complex 3-vector) and
``direction(q)``, the unit vector used in the spin operator gamma5 Sigma.a.
For most potentials the direction is simply A/|A|.  The Aharonov-Bohm line
keeps its conventional orientation a(q) = (q_y, -q_x, 0)/q, so that
A(q) = -(Phi/q) a(q) and the overall sign sits in the scalar coupling; see
``amplitude_scalar``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Union

import numpy as np

from .clifford import _check_unit
from .errors import NonUnitVector, NullPotentialAtQ, OutOfPlane, ZeroMomentumTransfer
from .kinematics import cross

NULL_TOL = 1e-300
PLANE_TOL = 1e-9


def _q(q) -> tuple[np.ndarray, float]:
    q = np.asarray(q, dtype=float)
    if q.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {q.shape}")
    qn = float(np.linalg.norm(q))
    if qn < NULL_TOL:
        raise ZeroMomentumTransfer("A(q) is not defined at q = 0")
    return q, qn


@dataclass(frozen=True)
class AharonovBohm:
    """Flux line along z carrying flux ``flux``; q must lie in the x-y plane."""

    flux: float
    charge: float = 1.0
    kind: str = field(default="ab", init=False)

    def _check_plane(self, q, qn):
        if abs(q[2]) > PLANE_TOL * max(1.0, qn):
            raise OutOfPlane(f"q_z = {q[2]:.3e}: AB transform assumes normal incidence (q in the x-y plane)")

    def fourier_amplitude(self, q) -> np.ndarray:
        q, qn = _q(q)
        self._check_plane(q, qn)
        q2 = q[0] ** 2 + q[1] ** 2
        return (-self.flux * np.array([q[1], -q[0], 0.0]) / q2).astype(complex)

    def direction(self, q) -> np.ndarray:
        q, qn = _q(q)
        self._check_plane(q, qn)
        v = np.array([q[1], -q[0], 0.0])
        return (v / np.linalg.norm(v)).astype(complex)


@dataclass(frozen=True)
class Dipole:
    """Point magnetic dipole; A(q) = mu x q / q^2 (numerical prefactor set to 1)."""

    moment: tuple[float, float, float]
    charge: float = 1.0
    kind: str = field(default="dipole", init=False)

    def fourier_amplitude(self, q) -> np.ndarray:
        q, qn = _q(q)
        return (cross(np.asarray(self.moment, dtype=float), q) / qn**2).astype(complex)

    def direction(self, q) -> np.ndarray:
        return _unit(self.fourier_amplitude(q))


@dataclass(frozen=True)
class FixedDirection:
    """Unit-magnitude potential pointing along a fixed (possibly complex) direction."""

    a_hat: tuple
    charge: float = 1.0
    kind: str = field(default="fixed", init=False)

    def __post_init__(self):
        a = np.asarray(self.a_hat, dtype=complex)
        if a.shape != (3,):
            raise ValueError("a_hat must be a 3-vector")
        if np.all(np.isreal(a)):
            _check_unit(a.real)
        elif abs(np.sum(np.abs(a) ** 2) - 1.0) > 1e-12:
            raise NonUnitVector("sum |a_i|^2 must be 1")

    def fourier_amplitude(self, q) -> np.ndarray:
        _q(q)
        return np.asarray(self.a_hat, dtype=complex)

    def direction(self, q) -> np.ndarray:
        return self.fourier_amplitude(q)


@dataclass(frozen=True)
class GaugeShifted:
    """A(q) -> A(q) + q f(q) for a caller-supplied scalar function ``f``."""

    base: "PotentialSpec"
    f: Callable[[np.ndarray], complex]
    kind: str = field(default="gauge_shifted", init=False)

    @property
    def charge(self) -> float:
        return self.base.charge

    def fourier_amplitude(self, q) -> np.ndarray:
        q, _ = _q(q)
        return self.base.fourier_amplitude(q) + q * complex(self.f(q))

    def direction(self, q) -> np.ndarray:
        return _unit(self.fourier_amplitude(q))


PotentialSpec = Union[AharonovBohm, Dipole, FixedDirection, GaugeShifted]


def _unit(a: np.ndarray) -> np.ndarray:
    mag = math.sqrt(float(np.sum(np.abs(a) ** 2)))
    if mag < NULL_TOL:
        raise NullPotentialAtQ("A(q) vanishes here; its direction is undefined (the amplitude is zero)")
    return a / mag


def fourier_amplitude(spec: PotentialSpec, q) -> np.ndarray:
    return spec.fourier_amplitude(q)


def direction_and_magnitude(spec: PotentialSpec, q) -> tuple[float, np.ndarray]:
    """Return (|A(q)|, a_hat) with a_hat the spec's unit direction at q."""
    a = spec.fourier_amplitude(q)
    mag = math.sqrt(float(np.sum(np.abs(a) ** 2)))
    if mag < NULL_TOL:
        raise NullPotentialAtQ("A(q) vanishes here; its direction is undefined (the amplitude is zero)")
    return mag, spec.direction(q)


def amplitude_scalar(spec: PotentialSpec, q) -> complex:
    """Scalar c with A(q) = c * a_hat (c = |A| unless the spec fixes its own orientation)."""
    a = spec.fourier_amplitude(q)
    return complex(np.vdot(spec.direction(q), a))


def make_potential(kind: str, *, flux=None, mu=None, ahat=None, charge: float = 1.0) -> PotentialSpec:
    """Build a potential from CLI-style names: ``ab``, ``dipole`` or ``fixed``."""
    if kind == "ab":
        return AharonovBohm(flux=1.0 if flux is None else float(flux), charge=charge)
    if kind == "dipole":
        if mu is None:
            raise ValueError("dipole potential needs a moment (mu)")
        return Dipole(moment=tuple(float(x) for x in mu), charge=charge)
    if kind == "fixed":
        if ahat is None:
            raise ValueError("fixed potential needs a direction (ahat)")
        a = np.asarray(ahat, dtype=float)
        a = a / np.linalg.norm(a)
        return FixedDirection(a_hat=tuple(a), charge=charge)
    raise ValueError(f"unknown potential kind {kind!r}")
