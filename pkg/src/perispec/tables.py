"""Row-oriented tables for the CLI and the figure-reproduction protocol."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from . import asymptotics
from .eigenvalues import DEFAULT_TOL, EvalPolicy, MaterialParams, SpectrumSample, eval_spectrum

EIGS_COLUMNS = ("nu_norm", "lambda1", "lambda2", "lambda11", "lambda12")
FIGURE_COLUMNS = (
    "nu_norm",
    "lambda1",
    "lambda2",
    "asym1",
    "asym2",
    "abs_err1",
    "abs_err2",
    "branch",
)

#: Default figure panels: kernel exponents spanning the bounded, logarithmic,
#: linear, and near-quadratic growth regimes, at two horizon scales.
PANEL_BETA_OFFSETS = (-1.0, -0.5, 0.0, 1.0, 1.5)
PANEL_DELTAS = (1.0, 2.0)

FIGURE_POINTS = 1000
FIGURE_NU_MAX = 30.0


@dataclass(frozen=True)
class FigureRow:
    nu_norm: float
    lambda1: float
    lambda2: float
    asym1: Optional[float]
    asym2: Optional[float]
    abs_err1: Optional[float]
    abs_err2: Optional[float]
    branch: str


def wavenumber_grid(nu_min: float, nu_max: float, points: int) -> List[float]:
    if points < 1:
        raise ValueError(f"points must be >= 1, got {points}")
    if not (0.0 <= nu_min <= nu_max):
        raise ValueError(f"need 0 <= nu_min <= nu_max, got [{nu_min}, {nu_max}]")
    return [float(v) for v in np.linspace(nu_min, nu_max, points)]


def eigs_table(
    params: MaterialParams,
    nu_min: float,
    nu_max: float,
    points: int,
    policy: Optional[EvalPolicy] = None,
    tol: float = DEFAULT_TOL,
) -> List[SpectrumSample]:
    return eval_spectrum(params, wavenumber_grid(nu_min, nu_max, points), policy, tol)


def figure_table(
    dim: int,
    beta: float,
    delta: float,
    mu: float = 1.0,
    lambda_star: float = 2.0,
    points: int = FIGURE_POINTS,
    nu_max: float = FIGURE_NU_MAX,
    tol: float = DEFAULT_TOL,
) -> List[FigureRow]:
    """Exact eigenvalues vs their asymptotic approximations on [0, nu_max].

    The lambda columns always come from the exact series (that is the point
    of the comparison); the asym columns and their absolute errors are blank
    at nu = 0 where log z and the negative powers are undefined.
    """
    params = MaterialParams(n=dim, delta=delta, beta=beta, mu=mu, lambda_star=lambda_star)
    branch = asymptotics.branch_for(params).value if beta < dim + 2 else ""
    samples = eval_spectrum(
        params, wavenumber_grid(0.0, nu_max, points), EvalPolicy.series_only(), tol
    )
    rows = []
    for s in samples:
        err1 = abs(s.lambda1 - s.asym1) if s.asym1 is not None else None
        err2 = abs(s.lambda2 - s.asym2) if s.asym2 is not None else None
        rows.append(
            FigureRow(
                nu_norm=s.nu_norm,
                lambda1=s.lambda1,
                lambda2=s.lambda2,
                asym1=s.asym1,
                asym2=s.asym2,
                abs_err1=err1,
                abs_err2=err2,
                branch=branch if s.asym1 is not None else "",
            )
        )
    return rows


def default_panels(dim: int, beta: Optional[float] = None, delta: Optional[float] = None):
    """(beta, delta) pairs for the documented default panel set, optionally
    pinned to a single beta or delta."""
    betas = (beta,) if beta is not None else tuple(dim + off for off in PANEL_BETA_OFFSETS)
    deltas = (delta,) if delta is not None else PANEL_DELTAS
    return [(b, d) for b in betas for d in deltas]


def format_cell(value) -> str:
    """Locale-independent cell: 17 significant digits, empty for absent."""
    if value is None:
        return ""
    if isinstance(value, float):
        if not math.isfinite(value):
            return repr(value)
        return format(value, ".17g")
    return str(value)
