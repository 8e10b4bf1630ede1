"""Parameter sweeps of the steady-state figures of merit.

One-dimensional sweeps over the reset or dephasing rate collect, per
grid point, the mean QFI, the two eigenvalue branches of the moment
matrix, the optimal axis and both entanglement measures.  A bisection on
the branch gap locates the critical point where the optimal axis flips.
Rows serialize deterministically to CSV or JSON with 9 significant
digits.
"""

import csv
import io
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .dynamics import ModelParams, steady_state
from .entanglement import concurrence, negativity
from .errors import (
    DegenerateLimitError,
    DegenerateSteadyStateError,
    NoConvergenceError,
    NoSignChangeError,
)
from .metrology import collective_spin_ops, mean_qfi_max

CSV_HEADER = ("r,gamma,g,mean_qfi,lambda_x,lambda_yz_hi,lambda_yz_lo,"
              "concurrence,negativity,opt_nx,opt_ny,opt_nz")
CSV_FIELDS = tuple(CSV_HEADER.split(","))
CRITICAL_BRACKET_WIDTH = 1e-4

_SPIN2 = collective_spin_ops(2)
_SOLVER_ERRORS = (DegenerateSteadyStateError, NoConvergenceError, DegenerateLimitError)


@dataclass(frozen=True)
class SweepRow:
    """One evaluated grid point of a sweep."""

    r: float
    gamma: float
    g: float
    mean_qfi: float
    lambda_x: float
    lambda_yz_hi: float
    lambda_yz_lo: float
    concurrence: float
    negativity: float
    opt_nx: float
    opt_ny: float
    opt_nz: float

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in CSV_FIELDS}


@dataclass(frozen=True)
class CriticalPoint:
    """Bisection result for the axis-flip crossing."""

    vary: str
    value: float
    bracket_width: float

    def to_dict(self) -> dict:
        return {"vary": self.vary, "value": self.value, "bracket_width": self.bracket_width}


@dataclass(frozen=True)
class SweepSpec:
    """Vary r or gamma over [start, stop], holding the other rate fixed.

    The coupling is either given directly (``g``) or as a multiple of
    the dephasing rate (``g_ratio``); exactly one of the two must be set.
    """

    vary: str
    start: float
    stop: float
    steps: int
    fixed_r: float | None = None
    fixed_gamma: float | None = None
    g: float | None = None
    g_ratio: float | None = None
    method: str = "closed_form"

    def __post_init__(self):
        if self.vary not in ("r", "gamma"):
            raise ValueError(f"vary must be 'r' or 'gamma', got {self.vary!r}")
        if not self.start < self.stop:
            raise ValueError(f"need start < stop, got [{self.start}, {self.stop}]")
        if self.start < 0.0:
            raise ValueError(f"rates are non-negative, got start {self.start}")
        if self.steps < 2:
            raise ValueError(f"need at least 2 steps, got {self.steps}")
        if (self.g is None) == (self.g_ratio is None):
            raise ValueError("set exactly one of g and g_ratio")
        fixed_name = "fixed_gamma" if self.vary == "r" else "fixed_r"
        unused_name = "fixed_r" if self.vary == "r" else "fixed_gamma"
        if getattr(self, fixed_name) is None:
            raise ValueError(f"vary={self.vary!r} needs {fixed_name}")
        if getattr(self, unused_name) is not None:
            raise ValueError(f"vary={self.vary!r} must not set {unused_name}")

    def grid(self) -> np.ndarray:
        return np.linspace(self.start, self.stop, self.steps)

    def params_at(self, value: float) -> ModelParams:
        r = value if self.vary == "r" else self.fixed_r
        gamma = value if self.vary == "gamma" else self.fixed_gamma
        g = self.g if self.g is not None else self.g_ratio * gamma
        return ModelParams(r=r, gamma=gamma, g=g)


def evaluate_point(params: ModelParams, method: str = "closed_form") -> SweepRow:
    """All figures of merit for one parameter point.

    lambda_x is the moment-matrix entry C_xx; the yz block contributes
    the branches m +/- sqrt(((C_yy - C_zz)/2)^2 + C_yz^2) around its mean
    m.  Their crossing with lambda_x is what ``find_critical_point``
    bisects on.
    """
    rho = steady_state(params, method=method)
    result = mean_qfi_max(rho, _SPIN2)
    c = result.c
    block_mean = 0.5 * float(c[1, 1] + c[2, 2])
    half_gap = math.hypot(0.5 * (c[1, 1] - c[2, 2]), c[1, 2])
    return SweepRow(
        r=params.r,
        gamma=params.gamma,
        g=params.g,
        mean_qfi=result.mean_f,
        lambda_x=float(c[0, 0]),
        lambda_yz_hi=block_mean + half_gap,
        lambda_yz_lo=block_mean - half_gap,
        concurrence=concurrence(rho),
        negativity=negativity(rho),
        opt_nx=result.opt_dir.nx,
        opt_ny=result.opt_dir.ny,
        opt_nz=result.opt_dir.nz,
    )


def run_sweep(spec: SweepSpec) -> list[SweepRow]:
    """Evaluate every grid point; solver failures name the offending point."""
    rows = []
    for value in spec.grid():
        try:
            rows.append(evaluate_point(spec.params_at(value), spec.method))
        except _SOLVER_ERRORS as err:
            raise type(err)(f"{err} [at {spec.vary} = {value:.9g}]") from err
    return rows


def find_critical_point(spec: SweepSpec) -> CriticalPoint:
    """Bisect lambda_x - lambda_yz_hi to the axis-flip crossing.

    The sweep interval [start, stop] must bracket a sign change; the
    bisection stops once the bracket is narrower than 1e-4.
    """

    def gap(value: float) -> float:
        row = evaluate_point(spec.params_at(value), spec.method)
        return row.lambda_x - row.lambda_yz_hi

    lo, hi = spec.start, spec.stop
    gap_lo, gap_hi = gap(lo), gap(hi)
    if gap_lo * gap_hi > 0.0:
        raise NoSignChangeError(
            f"lambda_x - lambda_yz_hi keeps its sign on {spec.vary} in [{lo}, {hi}] "
            f"({gap_lo:.3e} and {gap_hi:.3e})")
    while hi - lo > CRITICAL_BRACKET_WIDTH:
        mid = 0.5 * (lo + hi)
        gap_mid = gap(mid)
        if gap_lo * gap_mid <= 0.0:
            hi, gap_hi = mid, gap_mid
        else:
            lo, gap_lo = mid, gap_mid
    return CriticalPoint(vary=spec.vary, value=0.5 * (lo + hi), bracket_width=0.5 * (hi - lo))


def _nine_digits(x: float) -> str:
    return f"{x:.9g}"


def _to_csv(payload) -> str:
    if isinstance(payload, CriticalPoint):
        return ("vary,value,bracket_width\n"
                f"{payload.vary},{_nine_digits(payload.value)},"
                f"{_nine_digits(payload.bracket_width)}\n")
    lines = [CSV_HEADER]
    for row in payload:
        lines.append(",".join(_nine_digits(getattr(row, name)) for name in CSV_FIELDS))
    return "\n".join(lines) + "\n"


def _to_json(payload) -> str:
    if isinstance(payload, CriticalPoint):
        obj = {"vary": payload.vary,
               "value": float(_nine_digits(payload.value)),
               "bracket_width": float(_nine_digits(payload.bracket_width))}
    else:
        obj = [{name: float(_nine_digits(getattr(row, name))) for name in CSV_FIELDS}
               for row in payload]
    return json.dumps(obj, indent=2) + "\n"


def emit(payload, fmt: str = "csv", path: str | None = None) -> None:
    """Serialize rows or a critical point to CSV or JSON.

    Values carry 9 significant digits; lines end with a bare newline.
    ``path`` of None writes to stdout.
    """
    if fmt == "csv":
        text = _to_csv(payload)
    elif fmt == "json":
        text = _to_json(payload)
    else:
        raise ValueError(f"unknown format {fmt!r}; choose csv or json")
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="") as handle:
            handle.write(text)


def parse_csv(text: str) -> list[SweepRow]:
    """Read sweep rows back from CSV produced by ``emit``."""
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames != list(CSV_FIELDS):
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [SweepRow(**{name: float(record[name]) for name in CSV_FIELDS})
            for record in reader]
