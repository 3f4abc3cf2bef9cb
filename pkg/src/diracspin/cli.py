"""Command-line front end.

    diracspin algebra-check [--seed N] [--trials N]
    diracspin amplitude --potential ab --flux 1 --p 1 --mass 1 --theta 1.0 --hin + --hout +
    diracspin sweep --potential dipole --mu 0,0,1 --theta-min 0.1 --theta-max 3 --steps 50 --out sweep.csv
    diracspin xsec --flux 1 --p 1 --mass 1 --theta-min 0.1 --theta-max 3 --steps 100

Exit codes: 0 success, 1 runtime/domain error, 2 usage error.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
import tempfile
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import amplitude as amp
from .clifford import check_algebra
from .errors import ScatteringError
from .kinematics import FrameBatch, decompose, frame_from_angle, random_frame
from .potentials import Dipole, FixedDirection, GaugeShifted, direction_and_magnitude, make_potential

CHECK_TOL = 1e-10
SWEEP_HEADER = "theta,A,B,C,re_M,im_M,abs2_M,abs2_M_avg,dsigma_dtheta"
XSEC_HEADER = "theta,abs2_M_avg,dsigma_dtheta,dsigma_dtheta_quoted,dsigma_times_sin2"


@dataclass(frozen=True)
class RunConfig:
    command: str
    potential: str = "ab"
    flux: float = 1.0
    mu: Optional[tuple[float, float, float]] = None
    ahat: Optional[tuple[float, float, float]] = None
    charge: float = 1.0
    p: float = 1.0
    mass: float = 1.0
    theta: Optional[float] = None
    theta_min: Optional[float] = None
    theta_max: Optional[float] = None
    steps: int = 100
    h_in: int = 1
    h_out: int = 1
    incident: tuple[float, float, float] = (1.0, 0.0, 0.0)
    normal: tuple[float, float, float] = (0.0, 0.0, 1.0)
    normalization: str = "mass"
    out: Optional[str] = None
    seed: int = 0
    trials: int = 1000

    def frame(self, theta: float):
        return frame_from_angle(theta, self.p, self.mass, self.incident, self.normal)

    def spec(self):
        return make_potential(self.potential, flux=self.flux, mu=self.mu, ahat=self.ahat, charge=self.charge)

    def grid(self) -> np.ndarray:
        return np.linspace(self.theta_min, self.theta_max, self.steps)


class UsageError(Exception):
    pass


def _triple(text: str) -> tuple[float, float, float]:
    try:
        vals = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X,Y,Z, got {text!r}") from None
    if len(vals) != 3 or not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError(f"expected three finite numbers X,Y,Z, got {text!r}")
    return vals


def _helicity(text: str) -> int:
    table = {"+": 1, "-": -1, "+1": 1, "-1": -1}
    if text not in table:
        raise argparse.ArgumentTypeError(f"helicity must be + or -, got {text!r}")
    return table[text]


def _finite(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--potential", choices=["ab", "dipole", "fixed"], default="ab")
    common.add_argument("--flux", type=_finite, default=1.0)
    common.add_argument("--mu", type=_triple)
    common.add_argument("--ahat", type=_triple)
    common.add_argument("--charge", type=_finite, default=1.0)
    common.add_argument("--p", type=_finite, default=1.0)
    common.add_argument("--mass", type=_finite, default=1.0)
    common.add_argument("--theta", type=_finite)
    common.add_argument("--theta-min", type=_finite)
    common.add_argument("--theta-max", type=_finite)
    common.add_argument("--steps", type=int, default=100)
    common.add_argument("--hin", type=_helicity, default=1)
    common.add_argument("--hout", type=_helicity, default=1)
    common.add_argument("--incident", type=_triple, default=(1.0, 0.0, 0.0))
    common.add_argument("--normal", type=_triple, default=(0.0, 0.0, 1.0), help="scattering-plane normal")
    common.add_argument("--normalization", choices=["mass", "unit"], default="mass")
    common.add_argument("--out")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=1000)

    parser = argparse.ArgumentParser(prog="diracspin", description="First-order Dirac spin amplitudes in the (k, q, l) frame.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("algebra-check", parents=[common], help="run every operator/amplitude identity on random frames")
    sub.add_parser("amplitude", parents=[common], help="evaluate one spin matrix element")
    sub.add_parser("sweep", parents=[common], help="angular sweep written as CSV")
    sub.add_parser("xsec", parents=[common], help="AB cross-section table as CSV")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(
        command=ns.command,
        potential=ns.potential,
        flux=ns.flux,
        mu=ns.mu,
        ahat=ns.ahat,
        charge=ns.charge,
        p=ns.p,
        mass=ns.mass,
        theta=ns.theta,
        theta_min=ns.theta_min,
        theta_max=ns.theta_max,
        steps=ns.steps,
        h_in=ns.hin,
        h_out=ns.hout,
        incident=ns.incident,
        normal=ns.normal,
        normalization=ns.normalization,
        out=ns.out,
        seed=ns.seed,
        trials=ns.trials,
    )
    validate(cfg)
    return cfg


def validate(cfg: RunConfig) -> None:
    if cfg.command == "algebra-check":
        if cfg.trials < 1:
            raise UsageError("--trials must be >= 1")
        return
    if cfg.p <= 0:
        raise UsageError("--p must be > 0")
    if cfg.mass <= 0:
        raise UsageError("--mass must be > 0")
    if cfg.potential == "dipole" and cfg.mu is None:
        raise UsageError("--potential dipole requires --mu X,Y,Z")
    if cfg.potential == "fixed":
        if cfg.ahat is None:
            raise UsageError("--potential fixed requires --ahat X,Y,Z")
        if math.hypot(*cfg.ahat) == 0:
            raise UsageError("--ahat must be nonzero")
    if cfg.command == "amplitude":
        if cfg.theta is None:
            raise UsageError("amplitude requires --theta")
        return
    if cfg.theta_min is None or cfg.theta_max is None:
        raise UsageError(f"{cfg.command} requires --theta-min and --theta-max")
    if not (0.0 <= cfg.theta_min < cfg.theta_max <= math.pi):
        raise UsageError("need 0 <= theta-min < theta-max <= pi")
    if cfg.steps < 2:
        raise UsageError("--steps must be >= 2")


def _fmt(x: float) -> str:
    return f"{x:.17e}"


def _fmt_coef(z) -> str:
    z = complex(z)
    return _fmt(z.real) if z.imag == 0 else repr(z)


def _atomic_write(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".diracspin-", dir=directory)
    try:
        with os.fdopen(fd, "w", newline="\n") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(cfg: RunConfig, text: str, out) -> None:
    if cfg.out:
        _atomic_write(cfg.out, text)
    else:
        out.write(text)


def _random_spec(rng: np.random.Generator, frame):
    """Random potential for the self-check ensemble; about half are gauge shifted."""
    choice = rng.integers(3)
    if choice == 0:
        v = rng.normal(size=3) + 1j * rng.normal(size=3)
        base = FixedDirection(tuple(v / np.linalg.norm(v)))
    elif choice == 1:
        base = Dipole(tuple(rng.normal(size=3)))
    else:
        v = rng.normal(size=3)
        base = FixedDirection(tuple(v / np.linalg.norm(v)))
    if rng.random() < 0.5:
        fval = complex(rng.normal(), rng.normal()) / max(frame.p, 1e-300)
        return GaugeShifted(base, lambda q, fval=fval: fval)
    return base


def run_algebra_check(seed: int, trials: int) -> tuple[dict[str, float], dict[str, float]]:
    rng = np.random.default_rng(seed)
    frames = [random_frame(rng) for _ in range(trials)]
    algebra = check_algebra(FrameBatch.stack(frames))
    amps: dict[str, float] = {}
    for fr in frames:
        _, a_hat = direction_and_magnitude(_random_spec(rng, fr), fr.q)
        for key, val in amp.check_amplitudes(fr, a_hat).items():
            amps[key] = max(amps.get(key, 0.0), val)
    return algebra, amps


def cmd_algebra_check(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    algebra, amps = run_algebra_check(cfg.seed, cfg.trials)
    lines = [f"algebra-check seed={cfg.seed} trials={cfg.trials} tolerance={CHECK_TOL:g}"]
    for key, val in algebra.items():
        lines.append(f"{key:<26s}{val:.3e}")
    for key, val in amps.items():
        note = "  (extension: flip pairs included)" if key == "sigma_q_all_pairs" else ""
        lines.append(f"{key:<26s}{val:.3e}{note}")
    worst = max(max(algebra.values()), max(amps.values()))
    ok = worst < CHECK_TOL
    lines.append(f"result {'PASS' if ok else 'FAIL'} max_deviation={worst:.3e}")
    out.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def amplitude_record(cfg: RunConfig, theta: float) -> dict[str, object]:
    frame = cfg.frame(theta)
    spec = cfg.spec()
    oracle = amp.oracle_element(frame, spec, cfg.h_in, cfg.h_out, cfg.normalization)
    reduced = amp.reduced_element(frame, spec, cfg.h_in, cfg.h_out, cfg.normalization)
    coef = oracle.coefficients
    return {
        "theta": _fmt(frame.theta),
        "h_in": "+" if cfg.h_in > 0 else "-",
        "h_out": "+" if cfg.h_out > 0 else "-",
        "A": _fmt_coef(coef.A),
        "B": _fmt_coef(coef.B),
        "C": _fmt_coef(coef.C),
        "re_M": _fmt(oracle.value.real),
        "im_M": _fmt(oracle.value.imag),
        "abs2_M": _fmt(abs(oracle.value) ** 2),
        "method": oracle.method,
        "agreement_delta": _fmt(abs(oracle.value - reduced.value)),
    }


def cmd_amplitude(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    rec = amplitude_record(cfg, cfg.theta)
    out.write("".join(f"{k}={v}\n" for k, v in rec.items()))
    return 0


def sweep_row(cfg: RunConfig, theta: float) -> list[str]:
    frame = cfg.frame(theta)
    spec = cfg.spec()
    res = amp.oracle_element(frame, spec, cfg.h_in, cfg.h_out, cfg.normalization)
    coef = res.coefficients
    avg = amp.spin_averaged_m2(frame, spec, cfg.normalization)
    xs = ""
    if cfg.potential == "ab":
        xs = _fmt(amp.ab_cross_section(frame, cfg.flux, cfg.charge, cfg.normalization).dsigma_dtheta)
    return [
        _fmt(frame.theta),
        _fmt_coef(coef.A),
        _fmt_coef(coef.B),
        _fmt_coef(coef.C),
        _fmt(res.value.real),
        _fmt(res.value.imag),
        _fmt(abs(res.value) ** 2),
        _fmt(avg),
        xs,
    ]


def _grid_rows(cfg: RunConfig, row_fn, err) -> list[str]:
    rows = []
    for theta in cfg.grid():
        try:
            rows.append(",".join(row_fn(cfg, float(theta))))
        except ScatteringError as exc:
            err.write(f"warning: skipping theta={theta:.17e}: {type(exc).__name__}: {exc}\n")
    return rows


def cmd_sweep(cfg: RunConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    rows = _grid_rows(cfg, sweep_row, err)
    _emit(cfg, "\n".join([SWEEP_HEADER, *rows]) + "\n", out)
    return 0


def xsec_row(cfg: RunConfig, theta: float) -> list[str]:
    frame = cfg.frame(theta)
    pt = amp.ab_cross_section(frame, cfg.flux, cfg.charge, cfg.normalization)
    return [
        _fmt(pt.theta),
        _fmt(pt.spin_averaged_M2),
        _fmt(pt.dsigma_dtheta),
        _fmt(pt.dsigma_dtheta_quoted),
        _fmt(pt.dsigma_dtheta * math.sin(pt.theta / 2) ** 2),
    ]


def cmd_xsec(cfg: RunConfig, out=None, err=None) -> int:
    out, err = out or sys.stdout, err or sys.stderr
    rows = _grid_rows(cfg, xsec_row, err)
    _emit(cfg, "\n".join([XSEC_HEADER, *rows]) + "\n", out)
    return 0


COMMANDS = {
    "algebra-check": cmd_algebra_check,
    "amplitude": cmd_amplitude,
    "sweep": cmd_sweep,
    "xsec": cmd_xsec,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
    except UsageError as exc:
        parser.error(str(exc))
    try:
        return COMMANDS[cfg.command](cfg)
    except ScatteringError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
