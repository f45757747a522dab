"""Inverse-CDF sampling in theta = arccos(x) coordinates.

Uniforms come from SplitMix64 (Steele, Lea and Flood; the variant used by
``java.util.SplittableRandom``): the top 53 bits of each output, offset by
half an ulp, give doubles in the open interval (0, 1). Streams depend only on
the seed, so they are reproducible across platforms and implementations.
Use distinct seeds for parallel streams.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._backend import core
from .densities import Density, fourier_coeffs
from .errors import NonConvergence

MAX_ITER = 200


@dataclass(frozen=True)
class SampleConfig:
    count: int
    seed: int = 0
    inversion_tolerance: float = 1e-12

    def __post_init__(self):
        if int(self.count) < 1:
            raise ValueError(f"count must be >= 1, got {self.count}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        if not 0.0 < self.inversion_tolerance <= 1e-6:
            raise ValueError("inversion_tolerance must lie in (0, 1e-6]")


def uniforms(seed: int, count: int) -> np.ndarray:
    return core.uniforms(int(seed), int(count))


def inverse_cdf(d: Density, u, tol: float = 1e-12) -> np.ndarray:
    """x in (-1, 1) with |F(x) - u| <= tol for each u in (0, 1)."""
    u = np.asarray(u, dtype=float)
    c = fourier_coeffs(d)
    theta, used = core.invert_theta(c, u.ravel(), tol, MAX_ITER)
    if used < 0:
        raise NonConvergence(f"inversion did not reach tol={tol:g} in {MAX_ITER} steps")
    x = np.cos(theta)
    lo, hi = np.nextafter(-1.0, 0.0), np.nextafter(1.0, 0.0)
    return np.clip(x, lo, hi).reshape(u.shape)


def sample(d: Density, cfg: SampleConfig) -> np.ndarray:
    return inverse_cdf(d, uniforms(cfg.seed, cfg.count), cfg.inversion_tolerance)
