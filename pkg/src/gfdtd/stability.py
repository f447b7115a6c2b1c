"""Von Neumann stability analysis for the generalized leapfrog scheme.

For a discrete plane-wave mode the scheme's amplification factor solves

    lambda^2 - (2 - alpha^2) lambda + 1 = 0,   alpha = 2 S(x(beta)),

where S is the truncated sine S(x) = sum_{p=0..N} (-1)^p x^(2p+1)/(2p+1)!
and x(beta) collects the stencil symbol plus the potential shift.  The
mode is bounded iff |alpha| <= 2, i.e. |S(x)| <= 1.

Two checks are provided.  The endpoint condition evaluates |S| only at
the Nyquist wavenumber (the largest x); it matches the published
stability theorems but silently assumes S is monotone up to that point,
which fails for N >= 1 once x_max passes S's first local maximum.  The
wavenumber scan evaluates |S| over sampled wavenumbers and is the
authoritative verdict; when the two disagree the report says so instead
of picking a side.
"""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .stencils import StencilOrder

# sampling slack allowed between scan max and endpoint value
SCAN_SLACK = 1e-6

DEFAULT_THRESHOLD = 0.99
DEFAULT_SCAN_SAMPLES = 256


def truncated_sine(x, N):
    """Degree-(2N+1) Taylor truncation of sin(x)."""
    x = np.asarray(x, dtype=float)
    acc = np.zeros_like(x)
    for p in range(N + 1):
        acc += (-1.0) ** p * x ** (2 * p + 1) / math.factorial(2 * p + 1)
    return float(acc) if acc.ndim == 0 else acc


@dataclass(frozen=True)
class StabilitySymbol:
    """Argument x of the truncated sine at one sampled wavenumber pair."""

    x: float
    beta_x: float
    beta_y: float | None = None


class Verdict(Enum):
    STABLE_BY_ENDPOINT = "stable_by_endpoint"
    STABLE_BY_SCAN = "stable_by_scan"
    UNSTABLE = "unstable"
    ENDPOINT_SCAN_DISAGREE = "endpoint_scan_disagree"


@dataclass(frozen=True)
class StabilityReport:
    endpoint_value: float
    scan_max: float
    threshold_c: float
    verdict: Verdict
    margin: float
    endpoint_x: float = float("nan")


def _symbol_value(sx, sy, grid, cfg, v_max):
    """x from per-axis sin^2 values (sy ignored in 1-D)."""
    hbar, m = cfg.physics.hbar, cfg.physics.mass
    rx, ry = cfg.mesh_ratios(grid)
    if cfg.order is StencilOrder.SECOND_ORDER:
        val = rx * sx
        if grid.dims == 2:
            val = val + ry * sy
        val = (hbar / m) * val
    else:
        val = rx * sx * (3.0 + sx)
        if grid.dims == 2:
            val = val + ry * sy * (3.0 + sy)
        val = (hbar / (3.0 * m)) * val
    return val + v_max * cfg.dt / (2.0 * hbar)


def symbol_x(beta_x, beta_y, grid, cfg, v_max=0.0):
    """Stability-symbol argument at one wavenumber pair (beta_y unused in 1-D)."""
    cfg.validate_against(grid)
    sx = np.sin(0.5 * beta_x * grid.dx) ** 2
    sy = np.sin(0.5 * beta_y * grid.dy) ** 2 if grid.dims == 2 else 0.0
    x = float(_symbol_value(sx, sy, grid, cfg, v_max))
    return StabilitySymbol(x=x, beta_x=beta_x,
                           beta_y=beta_y if grid.dims == 2 else None)


def endpoint_x(grid, cfg, v_max=0.0):
    """Largest symbol argument, reached at the per-axis Nyquist wavenumber."""
    return float(_symbol_value(1.0, 1.0, grid, cfg, v_max))


def endpoint_condition(cfg, grid, v_max=0.0, c=DEFAULT_THRESHOLD):
    """(|S(x_max)|, satisfied) for the Nyquist-endpoint stability condition."""
    if not 0.0 < c < 1.0:
        raise ValueError(f"threshold c must lie in (0, 1), got {c}")
    value = abs(truncated_sine(endpoint_x(grid, cfg, v_max), cfg.N))
    return value, value <= c


def wavenumber_scan(cfg, grid, v_max=0.0, samples_per_axis=DEFAULT_SCAN_SAMPLES,
                    c=DEFAULT_THRESHOLD):
    """Evaluate |S(x(beta))| over sampled wavenumbers and issue a verdict.

    Wavenumbers are sampled uniformly over (0, pi/dx] per axis (all
    cross-combinations in 2-D).  The scan is authoritative: passing it
    yields STABLE_BY_SCAN; an endpoint pass with a scan failure yields
    ENDPOINT_SCAN_DISAGREE.
    """
    if samples_per_axis < 64:
        raise ValueError("samples_per_axis must be >= 64")
    cfg.validate_against(grid)
    ep_x = endpoint_x(grid, cfg, v_max)
    ep_value = abs(truncated_sine(ep_x, cfg.N))

    beta_x = np.linspace(0.0, np.pi / grid.dx, samples_per_axis + 1)[1:]
    sx = np.sin(0.5 * beta_x * grid.dx) ** 2
    if grid.dims == 2:
        beta_y = np.linspace(0.0, np.pi / grid.dy, samples_per_axis + 1)[1:]
        sy = np.sin(0.5 * beta_y * grid.dy) ** 2
        sx, sy = np.meshgrid(sx, sy, indexing="ij")
    else:
        sy = 0.0
    xs = _symbol_value(sx, sy, grid, cfg, v_max)
    scan_max = float(np.abs(truncated_sine(xs, cfg.N)).max())

    endpoint_ok = ep_value <= c
    scan_ok = scan_max <= c
    if scan_ok:
        verdict = Verdict.STABLE_BY_SCAN
    elif endpoint_ok:
        verdict = Verdict.ENDPOINT_SCAN_DISAGREE
    else:
        verdict = Verdict.UNSTABLE
    return StabilityReport(endpoint_value=ep_value, scan_max=scan_max,
                           threshold_c=c, verdict=verdict,
                           margin=c - scan_max, endpoint_x=ep_x)


def amplification_roots(alpha):
    """Roots of lambda^2 - (2 - alpha^2) lambda + 1 = 0 and the larger modulus.

    The constant term forces lambda1 * lambda2 = 1, so both roots sit on
    the unit circle exactly when |alpha| <= 2.
    """
    b = 2.0 - alpha * alpha
    disc = complex(b * b - 4.0)
    sq = np.sqrt(disc)
    lambda1 = (b + sq) / 2.0
    lambda2 = (b - sq) / 2.0
    return lambda1, lambda2, max(abs(lambda1), abs(lambda2))
