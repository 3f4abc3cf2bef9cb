import math

import numpy as np
import pytest
from hypothesis import strategies as st

from diracspin.kinematics import frame_from_momenta, random_frame

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


@pytest.fixture
def frames(rng):
    return [random_frame(rng) for _ in range(200)]


def unit(v):
    v = np.asarray(v, dtype=float)
    return v / np.linalg.norm(v)


finite = st.floats(-1.0, 1.0, allow_nan=False)


@st.composite
def unit_vectors(draw):
    v = np.array([draw(finite), draw(finite), draw(finite)])
    if np.linalg.norm(v) < 1e-3:
        v = np.array([0.0, 0.0, 1.0])
    return unit(v)


@st.composite
def complex_unit_vectors(draw):
    re = draw(unit_vectors())
    im = draw(unit_vectors())
    w = draw(st.floats(0.0, 1.0))
    v = re + 1j * w * im
    return v / math.sqrt(float(np.sum(np.abs(v) ** 2)))


@st.composite
def frames_st(draw, theta_lo=1e-3, theta_hi=math.pi - 1e-3):
    a = draw(unit_vectors())
    b = draw(unit_vectors())
    b = b - (b @ a) * a
    if np.linalg.norm(b) < 1e-3:
        b = np.cross(a, [1.0, 0.0, 0.0]) if abs(a[0]) < 0.9 else np.cross(a, [0.0, 1.0, 0.0])
    b = unit(b)
    theta = draw(st.floats(theta_lo, theta_hi))
    p = draw(st.floats(1e-2, 1e2))
    m = draw(st.floats(1e-2, 1e2))
    return frame_from_momenta(p * a, p * (math.cos(theta) * a + math.sin(theta) * b), m)


def rotation_matrix(rng):
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] *= -1
    return q
