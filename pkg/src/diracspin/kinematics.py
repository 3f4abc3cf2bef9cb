"""Intrinsic scattering frame (k, q, l) and projections onto it."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateGeometry, InelasticInput, NonUnitVector

THETA_MIN = 1e-6
ELASTIC_RTOL = 1e-9
UNIT_TOL = 1e-12


class Momentum3(NamedTuple):
    x: float
    y: float
    z: float


@dataclass(frozen=True)
class ScatteringFrame:
    """Orthonormal triad built from an elastic pair of momenta.

    k_hat is along p_f + p_i, q_hat along p_f - p_i and l_hat = k_hat x q_hat.
    ``theta`` is the full angle between p_i and p_f.
    """

    k_hat: np.ndarray
    q_hat: np.ndarray
    l_hat: np.ndarray
    theta: float
    p: float
    m: float
    E: float
    p_i_hat: np.ndarray
    p_f_hat: np.ndarray

    @property
    def p_i(self) -> np.ndarray:
        return self.p * self.p_i_hat

    @property
    def p_f(self) -> np.ndarray:
        return self.p * self.p_f_hat

    @property
    def q(self) -> np.ndarray:
        """Momentum transfer p_f - p_i (magnitude 2 p sin(theta/2))."""
        return 2 * self.p * math.sin(self.theta / 2) * self.q_hat

    @property
    def k(self) -> np.ndarray:
        return 2 * self.p * math.cos(self.theta / 2) * self.k_hat


def cross(a, b) -> np.ndarray:
    """3-vector cross product (np.cross is slow for single vectors)."""
    return np.array([a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]])


def _vec(v) -> np.ndarray:
    a = np.asarray(v, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("momentum components must be finite")
    return a


def frame_from_momenta(p_i, p_f, m: float) -> ScatteringFrame:
    p_i, p_f = _vec(p_i), _vec(p_f)
    if not (math.isfinite(m) and m >= 0):
        raise ValueError(f"mass must be finite and >= 0, got {m}")
    ni, nf = np.linalg.norm(p_i), np.linalg.norm(p_f)
    if ni == 0 or nf == 0:
        raise DegenerateGeometry("zero beam momentum")
    if abs(nf - ni) > ELASTIC_RTOL * ni:
        raise InelasticInput(f"|p_f| - |p_i| = {nf - ni:.3e} (relative tolerance {ELASTIC_RTOL:g})")
    ui, uf = p_i / ni, p_f / nf
    theta = math.atan2(np.linalg.norm(cross(ui, uf)), float(ui @ uf))
    if theta < THETA_MIN:
        raise DegenerateGeometry(f"theta = {theta:.3e} rad: forward scattering leaves q undefined")
    if theta > math.pi - THETA_MIN:
        raise DegenerateGeometry(f"theta = {theta:.15g} rad: backscattering leaves k undefined")
    k = uf + ui
    q = uf - ui
    k_hat = k / np.linalg.norm(k)
    q_hat = q / np.linalg.norm(q)
    # re-orthogonalise against roundoff before forming l
    q_hat = q_hat - (q_hat @ k_hat) * k_hat
    q_hat /= np.linalg.norm(q_hat)
    l_hat = cross(k_hat, q_hat)
    p = 0.5 * (ni + nf)
    return ScatteringFrame(
        k_hat=k_hat,
        q_hat=q_hat,
        l_hat=l_hat,
        theta=theta,
        p=float(p),
        m=float(m),
        E=math.hypot(p, m),
        p_i_hat=ui,
        p_f_hat=uf,
    )


def frame_from_angle(theta: float, p: float, m: float, incident=(1.0, 0.0, 0.0), normal=(0.0, 0.0, 1.0)) -> ScatteringFrame:
    """Frame for p_i = p * incident and p_f rotated by ``theta`` about ``normal``.

    ``normal`` is orthogonalised against ``incident``; the defaults put the
    beam along +x with scattering in the x-y plane.
    """
    n_in = _vec(incident)
    n_in = n_in / np.linalg.norm(n_in)
    n = _vec(normal)
    n = n - (n @ n_in) * n_in
    if np.linalg.norm(n) < 1e-12:
        raise ValueError("scattering-plane normal is parallel to the incident direction")
    n = n / np.linalg.norm(n)
    side = cross(n, n_in)
    p_i = p * n_in
    p_f = p * (math.cos(theta) * n_in + math.sin(theta) * side)
    return frame_from_momenta(p_i, p_f, m)


@dataclass(frozen=True)
class FrameBatch:
    """Stacked axes of several frames, for vectorised identity checks."""

    k_hat: np.ndarray
    q_hat: np.ndarray
    l_hat: np.ndarray
    p_i_hat: np.ndarray
    p_f_hat: np.ndarray
    theta: np.ndarray

    @classmethod
    def stack(cls, frames) -> "FrameBatch":
        frames = list(frames)
        return cls(*(np.array([getattr(f, name) for f in frames]) for name in ("k_hat", "q_hat", "l_hat", "p_i_hat", "p_f_hat", "theta")))


def random_frame(rng: np.random.Generator, theta_range=(1e-3, math.pi - 1e-3), p_range=(1e-2, 1e2), m_range=(1e-2, 1e2)) -> ScatteringFrame:
    """Elastic frame with isotropic beam, uniform theta and log-uniform p and m."""
    a = rng.normal(size=3)
    a /= np.linalg.norm(a)
    b = rng.normal(size=3)
    b -= (b @ a) * a
    b /= np.linalg.norm(b)
    theta = rng.uniform(*theta_range)
    p = math.exp(rng.uniform(math.log(p_range[0]), math.log(p_range[1])))
    m = math.exp(rng.uniform(math.log(m_range[0]), math.log(m_range[1])))
    return frame_from_momenta(p * a, p * (math.cos(theta) * a + math.sin(theta) * b), m)


@dataclass(frozen=True)
class GeometricCoefficients:
    """Projections of a (possibly complex) unit direction on l, k and q."""

    A: complex
    B: complex
    C: complex

    def recompose(self, frame: ScatteringFrame) -> np.ndarray:
        return self.A * frame.l_hat + self.B * frame.k_hat + self.C * frame.q_hat

    def as_tuple(self) -> tuple[complex, complex, complex]:
        return (self.A, self.B, self.C)


def decompose(frame: ScatteringFrame, a_hat) -> GeometricCoefficients:
    a = np.asarray(a_hat, dtype=complex)
    if a.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {a.shape}")
    norm2 = float(np.sum(np.abs(a) ** 2))
    if abs(norm2 - 1.0) > UNIT_TOL * 10:
        raise NonUnitVector(f"sum |a_i|^2 = {norm2!r}")

    def _simplify(z):
        z = complex(z)
        return z.real if z.imag == 0 else z

    return GeometricCoefficients(
        A=_simplify(a @ frame.l_hat),
        B=_simplify(a @ frame.k_hat),
        C=_simplify(a @ frame.q_hat),
    )


class HelicityAxes(NamedTuple):
    """Sigma.p_i = ci_k Sigma_k + ci_q Sigma_q, likewise for p_f."""

    ci_k: float
    ci_q: float
    cf_k: float
    cf_q: float


def helicity_axis_decomposition(frame: ScatteringFrame) -> HelicityAxes:
    c, s = math.cos(frame.theta / 2), math.sin(frame.theta / 2)
    return HelicityAxes(c, -s, c, s)
