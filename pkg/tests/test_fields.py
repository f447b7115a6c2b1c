import numpy as np
import pytest

from gfdtd import (ANGSTROM, ConfigurationError, DegenerateFieldError,
                   GaussianPacketSpec, GridSpec, WaveField,
                   gaussian_packet_2d, norm, normalize)


def test_grid_invariants():
    with pytest.raises(ConfigurationError):
        GridSpec(dims=1, nx=4, dx=1.0)
    with pytest.raises(ConfigurationError):
        GridSpec(dims=2, nx=8, dx=1.0, ny=8, dy=-1.0)
    with pytest.raises(ConfigurationError):
        GridSpec(dims=3, nx=8, dx=1.0)
    with pytest.raises(ConfigurationError):
        GridSpec(dims=1, nx=8, dx=1.0, ny=8)  # ny forbidden in 1-D


def test_norm_zero_field(small_grid_2d):
    assert norm(WaveField.zeros(small_grid_2d), small_grid_2d) == 0.0


def test_norm_single_point():
    grid = GridSpec(dims=2, nx=5, dx=1.0, ny=5, dy=1.0)
    real = np.zeros(grid.shape)
    real[2, 2] = 1.0
    assert norm(WaveField(real, np.zeros(grid.shape)), grid) == 1.0


def test_norm_shape_mismatch(small_grid_2d):
    wf = WaveField(np.zeros((3, 3)), np.zeros((3, 3)))
    with pytest.raises(ConfigurationError):
        norm(wf, small_grid_2d)


def test_norm_gaussian_against_direct_summation():
    # sigma spans 10 cells on a 200x200 grid, packet before normalization
    grid = GridSpec(dims=2, nx=200, dx=0.1 * ANGSTROM, ny=200, dy=0.1 * ANGSTROM)
    spec = GaussianPacketSpec(sigma=1.0 * ANGSTROM, wavelength=1.0 * ANGSTROM,
                              center_j=50, center_k=50, normalize=False)
    wf = gaussian_packet_2d(spec, grid)

    # brute-force oracle: explicit double loop over grid points
    total = 0.0
    for j in range(grid.nx):
        for k in range(grid.ny):
            total += wf.real_part[j, k] ** 2 + wf.imag_part[j, k] ** 2
    expected = total * grid.dx * grid.dy
    assert norm(wf, grid) == pytest.approx(expected, rel=1e-13)


def test_normalize_scaling(small_grid_2d):
    real = np.full(small_grid_2d.shape, 0.25)
    wf = WaveField(real, np.zeros(small_grid_2d.shape))
    n = norm(wf, small_grid_2d)
    scaled = normalize(wf, small_grid_2d)
    assert np.allclose(scaled.real_part, real / np.sqrt(n))
    assert norm(scaled, small_grid_2d) == pytest.approx(1.0, rel=1e-12)


def test_normalize_idempotent(rng, small_grid_2d):
    wf = WaveField(rng.normal(size=small_grid_2d.shape),
                   rng.normal(size=small_grid_2d.shape))
    once = normalize(wf, small_grid_2d)
    twice = normalize(once, small_grid_2d)
    assert np.allclose(once.real_part, twice.real_part, rtol=1e-12, atol=0)
    assert np.allclose(once.imag_part, twice.imag_part, rtol=1e-12, atol=0)


def test_normalize_zero_field_raises(small_grid_2d):
    with pytest.raises(DegenerateFieldError):
        normalize(WaveField.zeros(small_grid_2d), small_grid_2d)


def test_norm_phase_rotation_invariance(rng, small_grid_2d):
    wf = WaveField(rng.normal(size=small_grid_2d.shape),
                   rng.normal(size=small_grid_2d.shape))
    base = norm(wf, small_grid_2d)
    for theta in (0.3, 1.1, 2.9):
        c, s = np.cos(theta), np.sin(theta)
        rotated = WaveField(c * wf.real_part - s * wf.imag_part,
                            s * wf.real_part + c * wf.imag_part)
        assert norm(rotated, small_grid_2d) == pytest.approx(base, rel=1e-12)


def test_norm_quadratic_scaling(rng, small_grid_2d):
    wf = WaveField(rng.normal(size=small_grid_2d.shape),
                   rng.normal(size=small_grid_2d.shape))
    base = norm(wf, small_grid_2d)
    for c in (0.5, 2.0, 7.25):
        scaled = WaveField(c * wf.real_part, c * wf.imag_part)
        assert norm(scaled, small_grid_2d) == pytest.approx(c * c * base, rel=1e-12)
