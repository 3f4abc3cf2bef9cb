"""Exception types raised by the library."""


class ScatteringError(ValueError):
    """Base class for domain errors (bad geometry, bad potentials, bad vectors)."""


class NonUnitVector(ScatteringError):
    pass


class InelasticInput(ScatteringError):
    pass


class DegenerateGeometry(ScatteringError):
    pass


class NonPositiveMass(ScatteringError):
    pass


class ZeroMomentumTransfer(ScatteringError):
    pass


class OutOfPlane(ScatteringError):
    pass


class NullPotentialAtQ(ScatteringError):
    pass
