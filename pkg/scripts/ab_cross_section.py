"""AB cross-section table: unpolarized dsigma/dtheta from the brute-force elements.

    python scripts/ab_cross_section.py --p 1.5 --mass 0.8 --flux 1 --steps 50
"""
import argparse
import math

import numpy as np

from diracspin.amplitude import ab_cross_section
from diracspin.kinematics import frame_from_angle


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=float, default=1.0)
    ap.add_argument("--mass", type=float, default=1.0)
    ap.add_argument("--flux", type=float, default=1.0)
    ap.add_argument("--charge", type=float, default=1.0)
    ap.add_argument("--steps", type=int, default=30)
    args = ap.parse_args()

    print(f"{'theta':>10s} {'<|M|^2>':>14s} {'dsigma/dtheta':>14s} {'x sin^2(t/2)':>14s}")
    consts = []
    for theta in np.linspace(0.05, math.pi - 0.05, args.steps):
        pt = ab_cross_section(frame_from_angle(theta, args.p, args.mass), args.flux, args.charge)
        c = pt.dsigma_dtheta * math.sin(theta / 2) ** 2
        consts.append(c)
        print(f"{theta:10.4f} {pt.spin_averaged_M2:14.6e} {pt.dsigma_dtheta:14.6e} {c:14.6e}")
    closed = args.charge**2 * args.flux**2 / (8 * math.pi * args.p * args.mass**2)
    spread = (max(consts) - min(consts)) / max(consts)
    print(f"shape constant {consts[0]:.12e}, closed form e^2 Phi^2/(8 pi p m^2) = {closed:.12e}, spread {spread:.1e}")


if __name__ == "__main__":
    main()
