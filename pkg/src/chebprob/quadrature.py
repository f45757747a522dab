"""Gauss-Chebyshev rules for the arcsine and semicircle probability weights."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cheb_core import ChebKind

#: default node count for normalization and orthogonality checks
DEFAULT_NODES = 512


@dataclass(frozen=True)
class QuadRule:
    """Nodes (ascending, strictly inside (-1, 1)) and positive weights summing to 1.

    First kind integrates against f_C(x) = 1/(pi sqrt(1-x^2)); second kind
    against f_W(x) = (2/pi) sqrt(1-x^2). Both rules are exact for polynomials
    of degree <= 2n - 1.
    """

    kind: ChebKind
    nodes: np.ndarray
    weights: np.ndarray

    def __len__(self):
        return self.nodes.size


@lru_cache(maxsize=64)
def gauss_cheb_rule(kind: ChebKind, n: int) -> QuadRule:
    if n < 1:
        raise ValueError(f"rule needs at least one node, got {n}")
    i = np.arange(n, 0, -1)
    if kind is ChebKind.FIRST:
        nodes = np.cos((2 * i - 1) * np.pi / (2 * n))
        weights = np.full(n, 1.0 / n)
    else:
        angle = i * np.pi / (n + 1)
        nodes = np.cos(angle)
        weights = 2.0 / (n + 1) * np.sin(angle) ** 2
    # cos((2i-1)pi/2n) is not exactly 0 in floating point
    if n % 2 == 1:
        nodes[n // 2] = 0.0
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return QuadRule(kind, nodes, weights)


def integrate(f, rule: QuadRule) -> float:
    """Sum_i w_i f(x_i); ``f`` must accept an array of nodes."""
    return float(np.dot(rule.weights, f(rule.nodes)))


def theta_riemann(f, n: int = 1_000_000) -> float:
    """Midpoint rule for the integral of f over (-1, 1) in theta = arccos x.

    Plain integral (no weight): int f(x) dx = int_0^pi f(cos t) sin t dt.
    Intended as a slow, independent oracle only.
    """
    t = (np.arange(n) + 0.5) * (np.pi / n)
    return float(np.sum(f(np.cos(t)) * np.sin(t)) * (np.pi / n))
