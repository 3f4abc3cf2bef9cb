"""First-order Dirac scattering spin amplitudes in static magnetic fields,
expressed in the intrinsic (k, q, l) frame."""

from .amplitude import (
    AmplitudeResult,
    CrossSectionPoint,
    ab_cross_section,
    k_basis_element,
    oracle_element,
    reduced_element,
    s_matrix_element,
)
from .clifford import check_algebra, gamma5, rotation, sigma_dot
from .errors import (
    DegenerateGeometry,
    InelasticInput,
    NonPositiveMass,
    NonUnitVector,
    NullPotentialAtQ,
    OutOfPlane,
    ScatteringError,
    ZeroMomentumTransfer,
)
from .kinematics import GeometricCoefficients, Momentum3, ScatteringFrame, decompose, frame_from_angle, frame_from_momenta
from .potentials import AharonovBohm, Dipole, FixedDirection, GaugeShifted, direction_and_magnitude, fourier_amplitude
from .spinors import DiracSpinor, axis_spinor, expand_in_axis, helicity_spinor, pauli_eigenspinor

__version__ = "0.1.0"
