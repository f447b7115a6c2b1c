"""Staggered leapfrog time steppers.

One step advances the real part from t_{n-1} to t_n using the imaginary
part at t_{n-1/2}, then advances the imaginary part to t_{n+1/2} using
the freshly updated real part.  The update is a truncated Taylor series
in odd powers of the generator B:

    real += 2 * sum_{p=0..N} (dt/2)^(2p+1) * (-1)^(p+1)/(2p+1)! * B^(2p+1) imag
    imag += 2 * sum_{p=0..N} (dt/2)^(2p+1) * (-1)^p    /(2p+1)! * B^(2p+1) real

N = 0 recovers the classic explicit FDTD update.  The time step is
parameterized by the dimensionless ratio mu: dt = mu * 2 m dx^2 / hbar.
"""

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import ConfigurationError, DivergenceError
from .fields import PhysicalParams
from .stencils import StencilOrder, apply_b

# |value| exceeding this multiple of the initial max aborts the run
DIVERGENCE_FACTOR = 1.0e10

MAX_TRUNCATION_INDEX = 8  # keeps (2N+1)! exactly representable


@dataclass(frozen=True)
class SchemeConfig:
    """Truncation index, stencil order and time step for one run.

    dt must equal mu * 2 m dx^2 / hbar for the grid the config is used
    with; build instances via from_mu to keep the two consistent.
    """

    N: int
    order: StencilOrder
    mu: float
    dt: float
    physics: PhysicalParams

    def __post_init__(self):
        if self.N < 0 or self.N > MAX_TRUNCATION_INDEX:
            raise ConfigurationError(
                f"truncation index must be in [0, {MAX_TRUNCATION_INDEX}], got {self.N}")
        if not self.mu > 0:
            raise ConfigurationError("mu must be positive")
        if not self.dt > 0:
            raise ConfigurationError("dt must be positive")

    @classmethod
    def from_mu(cls, N, order, mu, physics, grid):
        dt = mu * 2.0 * physics.mass * grid.dx ** 2 / physics.hbar
        return cls(N=N, order=order, mu=mu, dt=dt, physics=physics)

    def validate_against(self, grid):
        expected = self.mu * 2.0 * self.physics.mass * grid.dx ** 2 / self.physics.hbar
        if abs(self.dt - expected) > 1e-14 * expected:
            raise ConfigurationError(
                f"dt={self.dt} inconsistent with mu={self.mu} and dx={grid.dx}")

    def mesh_ratios(self, grid):
        """(r_x, r_y) = (dt/dx^2, dt/dy^2); r_y is None in 1-D."""
        rx = self.dt / grid.dx ** 2
        ry = self.dt / grid.dy ** 2 if grid.dims == 2 else None
        return rx, ry

    def series_coefficients(self):
        """2 * (dt/2)^(2p+1) / (2p+1)! for p = 0..N, as exact doubles."""
        half = 0.5 * self.dt
        return [2.0 * half ** (2 * p + 1) / math.factorial(2 * p + 1)
                for p in range(self.N + 1)]


def _series(source, grid, potential, cfg, sign_of_p):
    """sum_p coeff[p] * sign_of_p(p) * B^(2p+1) applied to ``source``."""
    coeffs = cfg.series_coefficients()
    b = apply_b(source, grid, potential, cfg.physics, cfg.order)
    acc = (sign_of_p(0) * coeffs[0]) * b
    for p in range(1, cfg.N + 1):
        b = apply_b(b, grid, potential, cfg.physics, cfg.order)
        b = apply_b(b, grid, potential, cfg.physics, cfg.order)
        acc += (sign_of_p(p) * coeffs[p]) * b
    return acc


def step_real(field, potential, grid, cfg):
    """Updated real_part array (real advances t_{n-1} -> t_n)."""
    return field.real_part + _series(
        field.imag_part, grid, potential, cfg,
        sign_of_p=lambda p: -1.0 if p % 2 == 0 else 1.0)  # (-1)^(p+1)


def step_imag(field, potential, grid, cfg):
    """Updated imag_part array; real_part must already be at t_n."""
    return field.imag_part + _series(
        field.real_part, grid, potential, cfg,
        sign_of_p=lambda p: 1.0 if p % 2 == 0 else -1.0)  # (-1)^p


def step(field, potential, grid, cfg, max_abs_limit=None):
    """Advance one full step: real first, then imag from the new real.

    max_abs_limit, when given, is the divergence threshold (typically
    DIVERGENCE_FACTOR times the initial max amplitude); exceeding it or
    producing non-finite values raises DivergenceError with the step
    index the field was being advanced to.
    """
    new_real = step_real(field, potential, grid, cfg)
    advanced = replace(field, real_part=new_real,
                       real_time_index=field.real_time_index + 1)
    new_imag = step_imag(advanced, potential, grid, cfg)
    advanced = replace(advanced, imag_part=new_imag)
    if max_abs_limit is not None:
        m = advanced.max_abs()
        if not np.isfinite(m) or m > max_abs_limit:
            raise DivergenceError(advanced.real_time_index)
    elif not advanced.is_finite():
        raise DivergenceError(advanced.real_time_index)
    return advanced
