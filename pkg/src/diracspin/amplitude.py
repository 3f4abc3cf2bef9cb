"""Spin-space matrix elements, first-order S-matrix values and AB cross sections.

Two independent routes to the spin element M = <p_f; h'| gamma5 Sigma.a |p_i; h>:

* ``oracle_element`` builds the explicit 4-spinors and multiplies 4x4 matrices.
* ``reduced_element`` uses only the projections A = a.l, B = a.k and the
  closed form  M = (B + i h A sin(theta/2)) * 2 N'^2 p / (E + m),
  with the helicity-flip channel identically zero.

Both use the same frame-locked phase convention for the helicity states (see
``spinors.helicity_spinor``); M is otherwise only defined up to a phase.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from . import clifford
from .kinematics import GeometricCoefficients, ScatteringFrame, decompose
from .potentials import AharonovBohm, PotentialSpec, amplitude_scalar, direction_and_magnitude
from .spinors import axis_spinor, helicity_spinor, norm_constant

HELICITIES = (1, -1)
FLIP_TOL = 1e-12
AGREE_TOL = 1e-10


@dataclass(frozen=True)
class AmplitudeResult:
    value: complex
    method: Literal["oracle", "reduced"]
    coefficients: GeometricCoefficients
    helicities: tuple[int, int]
    frame_summary: tuple[float, float, float, float]
    magnitude: float
    scale: float


@dataclass(frozen=True)
class SMatrixElement:
    """First-order S-matrix value with the energy delta kept symbolic."""

    value: complex
    delta_factor: str = "delta(E_f - E_i)"

    def __complex__(self) -> complex:
        return complex(self.value)

    def __abs__(self) -> float:
        return abs(self.value)


@dataclass(frozen=True)
class CrossSectionPoint:
    theta: float
    dsigma_dtheta: float
    spin_averaged_M2: float
    dsigma_dtheta_quoted: float


def _check_h(h):
    if h not in HELICITIES:
        raise ValueError(f"helicity must be +1 or -1, got {h!r}")


def k_scale(frame: ScatteringFrame, normalization: str = "mass") -> float:
    """2 N'^2 p / (E + m), the magnitude of <k; h| gamma5 |k; h>."""
    nc = norm_constant(frame.E, frame.m, normalization)
    return 2 * nc**2 * frame.p / (frame.E + frame.m)


def amplitude_scale(frame: ScatteringFrame, magnitude: float = 1.0, normalization: str = "mass") -> float:
    return max(1.0, magnitude * k_scale(frame, normalization))


def spin_element(frame: ScatteringFrame, a_vec, h_in: int, h_out: int, normalization: str = "mass") -> complex:
    """Brute-force u_f^dagger gamma5 Sigma.a u_i for any (complex) 3-vector ``a_vec``."""
    _check_h(h_in)
    _check_h(h_out)
    u_i = helicity_spinor(frame, "i", h_in, normalization).components
    u_f = helicity_spinor(frame, "f", h_out, normalization).components
    op = clifford.GAMMA5 @ clifford.sigma_dot_any(a_vec)
    return complex(np.vdot(u_f, op @ u_i))


def _summary(frame):
    return (frame.theta, frame.p, frame.m, frame.E)


def oracle_element(
    frame: ScatteringFrame, spec: PotentialSpec, h_in: int, h_out: int, normalization: str = "mass"
) -> AmplitudeResult:
    mag, a_hat = direction_and_magnitude(spec, frame.q)
    value = spin_element(frame, a_hat, h_in, h_out, normalization)
    return AmplitudeResult(
        value=value,
        method="oracle",
        coefficients=decompose(frame, a_hat),
        helicities=(h_in, h_out),
        frame_summary=_summary(frame),
        magnitude=mag,
        scale=amplitude_scale(frame, mag, normalization),
    )


def reduced_value(coef: GeometricCoefficients, frame: ScatteringFrame, h: int, normalization: str = "mass") -> complex:
    _check_h(h)
    s = math.sin(frame.theta / 2)
    return complex((coef.B + 1j * h * coef.A * s) * k_scale(frame, normalization))


def reduced_element(frame: ScatteringFrame, spec: PotentialSpec, h: int, h_out: int | None = None, normalization: str = "mass") -> AmplitudeResult:
    """Closed-form element; ``h_out`` defaults to ``h`` and a flip returns exactly 0."""
    h_out = h if h_out is None else h_out
    _check_h(h_out)
    mag, a_hat = direction_and_magnitude(spec, frame.q)
    coef = decompose(frame, a_hat)
    value = reduced_value(coef, frame, h, normalization) if h_out == h else 0j
    return AmplitudeResult(
        value=value,
        method="reduced",
        coefficients=coef,
        helicities=(h, h_out),
        frame_summary=_summary(frame),
        magnitude=mag,
        scale=amplitude_scale(frame, mag, normalization),
    )


def s_matrix_element(
    frame: ScatteringFrame, spec: PotentialSpec, h_in: int, h_out: int, normalization_N: float = 1.0, normalization: str = "mass"
) -> SMatrixElement:
    """-2 pi e |N|^2 c M, where A(q) = c a_hat; the energy delta is not multiplied in."""
    m = oracle_element(frame, spec, h_in, h_out, normalization).value
    c = amplitude_scalar(spec, frame.q)
    return SMatrixElement(-2 * math.pi * spec.charge * abs(normalization_N) ** 2 * c * m)


def k_basis_element(frame: ScatteringFrame, h: int, normalization: str = "mass") -> complex:
    """<k; h| gamma5 |k; h> from explicit spinors (equals h * 2 N'^2 p / (E+m))."""
    _check_h(h)
    u = axis_spinor(frame, frame.k_hat, h, normalization).components
    return complex(np.vdot(u, clifford.GAMMA5 @ u))


def axis_basis_element(frame: ScatteringFrame, op: np.ndarray, axis, s_out: int, s_in: int, normalization: str = "mass") -> complex:
    """<axis; s_out| op |axis; s_in> with both states built on the same axis."""
    u_in = axis_spinor(frame, axis, s_in, normalization).components
    u_out = axis_spinor(frame, axis, s_out, normalization).components
    return complex(np.vdot(u_out, op @ u_in))


def spin_averaged_m2(frame: ScatteringFrame, spec: PotentialSpec, normalization: str = "mass") -> float:
    """(1/2) sum over all four helicity pairs of |M|^2 (flip pairs included)."""
    total = 0.0
    for h_in in HELICITIES:
        for h_out in HELICITIES:
            total += abs(oracle_element(frame, spec, h_in, h_out, normalization).value) ** 2
    return 0.5 * total


def ab_cross_section(frame: ScatteringFrame, flux: float, e: float = 1.0, normalization: str = "mass") -> CrossSectionPoint:
    """Unpolarized AB cross section from the first-order matrix elements.

    dsigma/dtheta = e^2 Phi^2 / (2 pi p^3 sin^2(theta/2)) * (1/2) sum |M|^2.
    With the "mass" normalization the spin sum is p^2/(4 m^2), giving
    e^2 Phi^2 / (8 pi p m^2 sin^2(theta/2)).  ``dsigma_dtheta_quoted`` is the
    textbook closed form e^2 Phi^2 / (8 pi p sin^2(theta/2)); the two agree at m = 1.
    """
    spec = AharonovBohm(flux=flux, charge=e)
    m2 = spin_averaged_m2(frame, spec, normalization)
    s2 = math.sin(frame.theta / 2) ** 2
    pref = e**2 * flux**2 / (2 * math.pi * frame.p**3 * s2)
    quoted = e**2 * flux**2 / (8 * math.pi * frame.p * s2)
    return CrossSectionPoint(frame.theta, pref * m2, m2, quoted)


def check_amplitudes(frame: ScatteringFrame, a_hat, normalization: str = "mass") -> dict[str, float]:
    """Scaled deviations of the amplitude-level identities for one (frame, a_hat) pair."""
    coef = decompose(frame, a_hat)
    scale = amplitude_scale(frame, 1.0, normalization)
    s = math.sin(frame.theta / 2)
    g5 = clifford.GAMMA5
    ops = {
        "a": g5 @ clifford.sigma_dot_any(a_hat),
        "k": g5 @ clifford.sigma_dot(frame.k_hat),
        "q": g5 @ clifford.sigma_dot(frame.q_hat),
        "l": g5 @ clifford.sigma_dot(frame.l_hat),
    }
    k_states = {h: axis_spinor(frame, frame.k_hat, h, normalization) for h in HELICITIES}
    u_i = {h: helicity_spinor(frame, "i", h, normalization, k_states[h]).components for h in HELICITIES}
    u_f = {h: helicity_spinor(frame, "f", h, normalization, k_states[h]).components for h in HELICITIES}
    u_k = {h: k_states[h].components for h in HELICITIES}
    u_q = {h: axis_spinor(frame, frame.q_hat, h, normalization).components for h in HELICITIES}

    def el(op, h_in, h_out):
        return complex(np.vdot(u_f[h_out], ops[op] @ u_i[h_in]))

    out = dict.fromkeys(
        ["helicity_flip", "sigma_q_nonflip", "sigma_q_all_pairs", "oracle_vs_reduced", "sigma_l_reduction", "linearity", "k_basis"],
        0.0,
    )
    for h_in in HELICITIES:
        for h_out in HELICITIES:
            mq = abs(el("q", h_in, h_out)) / scale
            out["sigma_q_all_pairs"] = max(out["sigma_q_all_pairs"], mq)
            if h_in != h_out:
                out["helicity_flip"] = max(out["helicity_flip"], abs(el("a", h_in, h_out)) / scale)
                continue
            h = h_in
            out["sigma_q_nonflip"] = max(out["sigma_q_nonflip"], mq)
            m, mk, ml = el("a", h, h), el("k", h, h), el("l", h, h)
            red = reduced_value(coef, frame, h, normalization)
            out["oracle_vs_reduced"] = max(out["oracle_vs_reduced"], abs(m - red) / scale)
            out["sigma_l_reduction"] = max(out["sigma_l_reduction"], abs(ml - 1j * h * s * mk) / scale)
            lin = (coef.B + 1j * h * coef.A * s) * mk
            out["linearity"] = max(out["linearity"], abs(m - lin) / scale)
            kb = h * complex(np.vdot(u_k[h], g5 @ u_k[h]))
            off = complex(np.vdot(u_k[-h], ops["k"] @ u_k[h]))
            qq = complex(np.vdot(u_q[h], ops["k"] @ u_q[h]))
            out["k_basis"] = max(out["k_basis"], abs(mk - kb) / scale, abs(off) / scale, abs(qq) / scale)
    return out
