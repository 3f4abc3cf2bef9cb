import math

import numpy as np
import pytest
import scipy.linalg
from hypothesis import given, settings
from hypothesis import strategies as st

from diracspin import amplitude as amp
from diracspin.clifford import GAMMA, GAMMA5, sigma_dot
from diracspin.kinematics import frame_from_angle, random_frame
from diracspin.potentials import (
    AharonovBohm,
    Dipole,
    FixedDirection,
    GaugeShifted,
    direction_and_magnitude,
    fourier_amplitude,
)
from diracspin.spinors import helicity_spinor

from conftest import complex_unit_vectors, frames_st, unit, unit_vectors

ALPHA = [GAMMA[0] @ GAMMA[i] for i in (1, 2, 3)]
PAULI = [np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]), np.array([[1, 0], [0, -1]])]
HEL = st.sampled_from([1, -1])


def brute_states(f, h):
    """Helicity states by an unrelated route: eigh on sigma.k, then expm rotations."""
    sk = sum(f.k_hat[i] * PAULI[i] for i in range(3))
    w, v = np.linalg.eigh(sk)
    chi = v[:, 1 if h > 0 else 0]
    n2 = (f.E + f.m) / (4 * f.m)
    k_state = math.sqrt(n2) * np.concatenate([chi, f.p * sk @ chi / (f.E + f.m)])
    gen = sigma_dot(f.l_hat)
    u_i = scipy.linalg.expm(0.25j * f.theta * gen) @ k_state
    u_f = scipy.linalg.expm(-0.25j * f.theta * gen) @ k_state
    return u_i, u_f


def brute_element(f, a_vec, h):
    u_i, u_f = brute_states(f, h)
    op = sum(a_vec[i] * ALPHA[i] for i in range(3))
    return np.vdot(u_f, op @ u_i)


@settings(max_examples=200)
@given(frames_st(), complex_unit_vectors(), HEL)
def test_oracle_matches_independent_brute_force(f, a, h):
    got = amp.oracle_element(f, FixedDirection(tuple(a)), h, h).value
    ref = brute_element(f, a, h)
    scale = amp.amplitude_scale(f)
    assert abs(got - ref) <= 1e-10 * scale


@settings(max_examples=200)
@given(frames_st(), complex_unit_vectors(), HEL)
def test_helicity_flip_vanishes(f, a, h):
    res = amp.oracle_element(f, FixedDirection(tuple(a)), h, -h)
    assert abs(res.value) <= 1e-12 * res.scale
    assert amp.reduced_element(f, FixedDirection(tuple(a)), h, -h).value == 0


def test_ab_positive_helicity_value():
    f = frame_from_angle(1.0, 1.0, 1.0)
    res = amp.oracle_element(f, AharonovBohm(1.0), 1, 1)
    # 2 N'^2 p / (E + m) with N'^2 = (E+m)/(4m) is p / (2m)
    assert res.value == pytest.approx(0.5, abs=1e-14)
    assert amp.k_scale(f) == pytest.approx(0.5, rel=1e-15)


@given(frames_st(), HEL, HEL)
def test_q_direction_never_contributes(f, h_in, h_out):
    res = amp.oracle_element(f, FixedDirection(tuple(f.q_hat)), h_in, h_out)
    assert abs(res.value) <= 1e-12 * res.scale


def test_reduced_pure_k_and_pure_l():
    f = frame_from_angle(1.3, 0.7, 1.9)
    ks = amp.k_scale(f)
    assert amp.reduced_element(f, FixedDirection(tuple(f.k_hat)), 1).value == pytest.approx(ks)
    assert amp.reduced_element(f, FixedDirection(tuple(f.k_hat)), -1).value == pytest.approx(ks)
    s = math.sin(f.theta / 2)
    for h in (1, -1):
        red = amp.reduced_element(f, FixedDirection(tuple(f.l_hat)), h).value
        assert red == pytest.approx(1j * h * s * ks, abs=1e-15)
        assert amp.oracle_element(f, FixedDirection(tuple(f.l_hat)), h, h).value == pytest.approx(red, abs=1e-14)


@settings(max_examples=300)
@given(frames_st(), complex_unit_vectors(), HEL, st.sampled_from(["mass", "unit"]))
def test_oracle_equals_reduced(f, a, h, norm):
    spec = FixedDirection(tuple(a))
    o = amp.oracle_element(f, spec, h, h, norm)
    r = amp.reduced_element(f, spec, h, normalization=norm)
    assert abs(o.value - r.value) <= 1e-10 * o.scale
    assert o.coefficients == r.coefficients


@given(frames_st(), HEL)
def test_sigma_l_reduction_and_linearity(f, h):
    s = math.sin(f.theta / 2)
    mk = amp.spin_element(f, f.k_hat, h, h)
    ml = amp.spin_element(f, f.l_hat, h, h)
    scale = amp.amplitude_scale(f)
    assert abs(ml - 1j * h * s * mk) <= 1e-12 * scale
    a = unit(np.array([0.3, -0.4, 0.8]))
    m = amp.spin_element(f, a, h, h)
    A, B = a @ f.l_hat, a @ f.k_hat
    assert abs(m - (B + 1j * h * A * s) * mk) <= 1e-12 * scale


@given(frames_st(), HEL)
def test_k_basis_elements(f, h):
    ks = amp.k_scale(f)
    scale = amp.amplitude_scale(f)
    assert amp.k_basis_element(f, h) == pytest.approx(h * ks, rel=1e-12)
    op = GAMMA5 @ sigma_dot(f.k_hat)
    assert abs(amp.axis_basis_element(f, op, f.k_hat, -h, h)) <= 1e-13 * scale
    assert abs(amp.axis_basis_element(f, op, f.q_hat, h, h)) <= 1e-13 * scale
    mk = amp.spin_element(f, f.k_hat, h, h)
    assert abs(mk - h * amp.k_basis_element(f, h)) <= 1e-12 * scale


def test_k_basis_unit_mass_momentum():
    f = frame_from_angle(0.9, 1.0, 1.0)
    assert amp.k_basis_element(f, 1) == pytest.approx(0.5, rel=1e-14)
    assert amp.k_basis_element(f, -1) == pytest.approx(-0.5, rel=1e-14)


@settings(max_examples=200)
@given(frames_st(), unit_vectors(), st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False), HEL, HEL)
def test_gauge_invariance(f, mu, fval, h_in, h_out):
    base = Dipole(tuple(mu))
    try:
        direction_and_magnitude(base, f.q)
    except Exception:
        return
    shifted = GaugeShifted(base, lambda q: fval / f.p)
    s0 = amp.s_matrix_element(f, base, h_in, h_out)
    s1 = amp.s_matrix_element(f, shifted, h_in, h_out)
    scale = max(1.0, abs(s0.value))
    assert abs(s0.value - s1.value) <= 1e-10 * scale


@given(frames_st(), unit_vectors(), HEL, HEL, st.floats(-3, 3), st.floats(0.1, 3))
def test_s_matrix_direct(f, mu, h_in, h_out, e, big_n):
    spec = Dipole(tuple(mu), charge=e)
    try:
        a_q = fourier_amplitude(spec, f.q)
        direction_and_magnitude(spec, f.q)
    except Exception:
        return
    u_i = helicity_spinor(f, "i", h_in).components
    u_f = helicity_spinor(f, "f", h_out).components
    direct = -2 * math.pi * e * big_n**2 * np.vdot(u_f, sum(a_q[i] * ALPHA[i] for i in range(3)) @ u_i)
    s = amp.s_matrix_element(f, spec, h_in, h_out, big_n)
    assert s.delta_factor == "delta(E_f - E_i)"
    assert abs(s.value - direct) <= 1e-10 * max(1.0, abs(direct), 2 * math.pi * abs(e) * big_n**2 * np.linalg.norm(a_q) * amp.k_scale(f))
    if h_in != h_out:
        assert abs(s.value) <= 1e-10 * max(1.0, 2 * math.pi * abs(e) * big_n**2 * np.linalg.norm(a_q) * amp.k_scale(f))


def test_s_matrix_zero_coupling():
    f = frame_from_angle(0.8, 1.0, 1.0)
    assert amp.s_matrix_element(f, AharonovBohm(1.0, charge=0.0), 1, 1).value == 0


def test_s_matrix_dipole_structure(rng):
    for _ in range(50):
        f = random_frame(rng, m_range=(0.5, 2), p_range=(0.5, 2))
        mu = rng.normal(size=3)
        spec = Dipole(tuple(mu), charge=0.3)
        q = f.q
        mxq = np.cross(mu, q)
        qq = q @ q
        a = mxq / np.linalg.norm(mxq)
        A, B = f.l_hat @ a, f.k_hat @ a
        s = math.sin(f.theta / 2)
        for h in (1, -1):
            expected = -h * 2 * math.pi * 0.3 * (np.linalg.norm(mxq) / qq) * (B + 1j * h * A * s) * amp.k_basis_element(f, h)
            got = amp.s_matrix_element(f, spec, h, h).value
            assert abs(got - expected) <= 1e-10 * max(1.0, abs(expected))


def test_linear_in_flux_and_charge():
    f = frame_from_angle(1.2, 1.1, 0.6)
    s1 = amp.s_matrix_element(f, AharonovBohm(1.0, charge=1.0), 1, 1).value
    s2 = amp.s_matrix_element(f, AharonovBohm(2.5, charge=1.0), 1, 1).value
    s3 = amp.s_matrix_element(f, AharonovBohm(1.0, charge=-0.4), 1, 1).value
    assert s2 == pytest.approx(2.5 * s1, rel=1e-13)
    assert s3 == pytest.approx(-0.4 * s1, rel=1e-13)


def test_ab_equal_helicity_elements_coincide():
    # with frame-locked phases M(-,-) = M(+,+) (both equal B * k_scale with B = 1)
    for theta in np.linspace(0.1, 3.0, 12):
        f = frame_from_angle(theta, 1.7, 0.8)
        mp = amp.oracle_element(f, AharonovBohm(1.0), 1, 1).value
        mm = amp.oracle_element(f, AharonovBohm(1.0), -1, -1).value
        assert abs(mm - mp) <= 1e-12
        assert abs(mp - amp.k_scale(f)) <= 1e-12


@pytest.mark.parametrize("p,m", [(1.0, 1.0), (0.3, 2.0), (5.0, 0.4)])
def test_ab_cross_section(p, m):
    thetas = np.linspace(0.05, math.pi - 0.05, 40)
    pts = [amp.ab_cross_section(frame_from_angle(t, p, m), flux=0.8, e=1.3) for t in thetas]
    for pt in pts:
        assert pt.spin_averaged_M2 == pytest.approx(p**2 / (4 * m**2), rel=1e-12)
        assert pt.dsigma_dtheta == pytest.approx(pt.dsigma_dtheta_quoted / m**2, rel=1e-12)
    shape = [pt.dsigma_dtheta * math.sin(pt.theta / 2) ** 2 for pt in pts]
    assert max(shape) - min(shape) <= 1e-10 * max(shape)
    assert shape[0] == pytest.approx((1.3 * 0.8) ** 2 / (8 * math.pi * p * m**2), rel=1e-12)


def test_check_amplitudes_report(rng):
    for _ in range(50):
        f = random_frame(rng)
        v = rng.normal(size=3) + 1j * rng.normal(size=3)
        rep = amp.check_amplitudes(f, v / np.linalg.norm(v))
        assert max(rep.values()) < 1e-10, rep


def test_invalid_helicity():
    f = frame_from_angle(1.0, 1.0, 1.0)
    with pytest.raises(ValueError):
        amp.oracle_element(f, AharonovBohm(1.0), 0, 1)
