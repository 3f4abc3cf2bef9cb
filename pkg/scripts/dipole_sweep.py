"""Equal-helicity dipole amplitudes versus angle for several moment orientations.

The moment is given in the fixed lab frame (incident +x, scattering plane x-y);
for each orientation the geometric coefficients and |M|^2 are printed for both
helicities, next to the closed form (B + i h A sin(theta/2)) 2N'^2 p/(E+m).
"""
import math

import numpy as np

from diracspin import amplitude as amp
from diracspin.kinematics import frame_from_angle
from diracspin.potentials import Dipole

MOMENTS = {"along normal": (0, 0, 1), "along incident": (1, 0, 0), "oblique": (0.3, -1.0, 0.5)}


def main(p=1.2, m=0.7, steps=9):
    for label, mu in MOMENTS.items():
        spec = Dipole(mu)
        print(f"moment {label} {mu}")
        print(f"  {'theta':>7s} {'A':>9s} {'B':>9s} {'C':>9s} {'|M+|^2':>11s} {'|M-|^2':>11s} {'max dev':>9s}")
        for theta in np.linspace(0.2, math.pi - 0.2, steps):
            f = frame_from_angle(theta, p, m)
            res = {h: amp.oracle_element(f, spec, h, h) for h in amp.HELICITIES}
            dev = max(abs(res[h].value - amp.reduced_element(f, spec, h).value) for h in amp.HELICITIES)
            c = res[1].coefficients
            print(f"  {theta:7.3f} {c.A:9.4f} {c.B:9.4f} {c.C:9.4f} {abs(res[1].value) ** 2:11.4e} {abs(res[-1].value) ** 2:11.4e} {dev:9.1e}")


if __name__ == "__main__":
    main()
