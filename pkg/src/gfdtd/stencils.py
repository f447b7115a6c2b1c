"""Spatial difference operators.

apply_laplacian implements the second-order 3-point and fourth-order
5-point central approximations of the Laplacian (per axis, scaled by
1/dx^2 and 1/dy^2).  Out-of-range neighbors read as zero (the field is
assumed to vanish far from the packet), so the discrete operator is the
Dirichlet-truncated matrix and its powers are plain matrix powers.

apply_b evaluates B = (hbar/2m) Laplacian - V/hbar, the generator whose
odd powers drive the generalized time stepper.  apply_b_power composes B
recursively; the wide explicit stencil of B^(2p+1) is never assembled.
"""

from enum import Enum

import numpy as np

from .errors import ConfigurationError
from .fields import _check_shape

# per-axis weights over offsets [-2, -1, 0, +1, +2]
_FOURTH_ORDER_WEIGHTS = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0
_SECOND_ORDER_WEIGHTS = np.array([1.0, -2.0, 1.0])


class StencilOrder(Enum):
    SECOND_ORDER = 2
    FOURTH_ORDER = 4

    @property
    def halo(self):
        return 1 if self is StencilOrder.SECOND_ORDER else 2

    @property
    def weights(self):
        if self is StencilOrder.SECOND_ORDER:
            return _SECOND_ORDER_WEIGHTS
        return _FOURTH_ORDER_WEIGHTS


class BoundaryPolicy(Enum):
    ZERO_DIRICHLET = "zero_dirichlet"


def _axis_difference(padded, weights, halo, axis, ndim):
    """Weighted sum of shifted views along one axis of a zero-padded array."""
    out = None
    n = padded.shape[axis] - 2 * halo
    for w, offset in zip(weights, range(-halo, halo + 1)):
        sl = [slice(halo, -halo)] * ndim
        sl[axis] = slice(halo + offset, halo + offset + n)
        term = w * padded[tuple(sl)]
        out = term if out is None else out + term
    return out


def apply_laplacian(component, grid, order=StencilOrder.SECOND_ORDER,
                    boundary=BoundaryPolicy.ZERO_DIRICHLET):
    """Discrete Laplacian of one field component, in 1/m^2.

    Returns (1/dx^2) * d2x + (1/dy^2) * d2y where d2 is the central
    difference of the requested order; 1-D grids use the x term only.
    """
    if boundary is not BoundaryPolicy.ZERO_DIRICHLET:
        raise ConfigurationError(f"unsupported boundary policy {boundary}")
    component = np.asarray(component, dtype=float)
    _check_shape(component, grid, "component")
    halo = order.halo
    weights = order.weights
    ndim = grid.dims

    padded = np.zeros(tuple(n + 2 * halo for n in component.shape))
    padded[(slice(halo, -halo),) * ndim] = component

    out = _axis_difference(padded, weights, halo, 0, ndim) / grid.dx ** 2
    if ndim == 2:
        out = out + _axis_difference(padded, weights, halo, 1, ndim) / grid.dy ** 2
    return out


def apply_b(component, grid, potential, physics, order=StencilOrder.SECOND_ORDER):
    """B f = (hbar/2m) Laplacian(f) - (V/hbar) f, in 1/s."""
    component = np.asarray(component, dtype=float)
    _check_shape(component, grid, "component")
    _check_shape(potential.values, grid, "potential")
    lap = apply_laplacian(component, grid, order)
    return (physics.hbar / (2.0 * physics.mass)) * lap \
        - (potential.values / physics.hbar) * component


def apply_b_power(component, power, grid, potential, physics,
                  order=StencilOrder.SECOND_ORDER):
    """B applied ``power`` times; power must be odd and positive.

    Each application re-reads out-of-range neighbors as zero, so this is
    the exact matrix power of the Dirichlet-truncated operator.
    """
    if power < 1 or power % 2 == 0:
        raise ConfigurationError(f"power must be odd and positive, got {power}")
    out = np.asarray(component, dtype=float)
    for _ in range(power):
        out = apply_b(out, grid, potential, physics, order)
    return out
