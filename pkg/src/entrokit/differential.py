"""Differential Shannon-entropy estimators for continuous data.

Two families are implemented:

* nearest-neighbor estimators (Kozachenko-Leonenko, Kraskov) operating on
  state-space sets of any dimension, with neighbor distances obtained from
  a KD-tree rather than brute force,
* sample-spacing estimators (Vasicek, Ebrahimi, Correa, Alizadeh-Arghami)
  for 1-D samples, based on order statistics.

All estimates are in nats by default and can be converted to any base.
Duplicate points produce zero neighbor distances; their logarithms are
clamped at machine epsilon and a warning reports how many were clamped.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree
from scipy.special import digamma, gammaln

from .core import as_state_space, as_timeseries, require_finite
from .errors import DegenerateDistanceWarning, InputTooShortError

_EULER_GAMMA = 0.5772156649015329


class DifferentialEstimator:
    pass


@dataclass(frozen=True)
class KozachenkoLeonenko(DifferentialEstimator):
    """First-nearest-neighbor estimator with Euclidean distances:
    H = psi(N) + gamma + ln V_d + (d/N) sum ln dist_i,
    V_d the d-dimensional Euclidean unit-ball volume."""


@dataclass(frozen=True)
class Kraskov(DifferentialEstimator):
    """k-nearest-neighbor estimator with Chebyshev distances:
    H = psi(N) - psi(k) + d ln 2 + (d/N) sum ln dist_i."""

    k: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("neighbor count k must be >= 1")


class _SpacingEstimator(DifferentialEstimator):
    """Shared validation for the 1-D m-spacing estimators."""

    def _window(self, n: int) -> int:
        m = self.m if self.m is not None else max(1, int(math.isqrt(n)))
        if m < 1:
            raise ValueError("spacing window m must be >= 1")
        if 2 * m >= n:
            raise InputTooShortError(2 * m + 1, n, what="sample")
        return m


@dataclass(frozen=True)
class Vasicek(_SpacingEstimator):
    """m-spacing estimator: mean of ln( N (x_(i+m) - x_(i-m)) / (2m) ).

    ``m`` defaults to floor(sqrt(N)) when omitted.
    """

    m: int | None = None


@dataclass(frozen=True)
class Ebrahimi(_SpacingEstimator):
    """Vasicek with boundary-corrected coefficients c_i in place of 2."""

    m: int | None = None


@dataclass(frozen=True)
class Correa(_SpacingEstimator):
    """Local-linear-regression spacing estimator: -mean ln b_i with b_i the
    least-squares slope of the order statistics inside each 2m+1 window."""

    m: int | None = None


@dataclass(frozen=True)
class AlizadehArghami(_SpacingEstimator):
    """Vasicek variant whose boundary terms use one-sided spacings
    (coefficient 1 instead of 2 within m of either end)."""

    m: int | None = None


def _clamped_log(values, what: str) -> np.ndarray:
    tiny = np.finfo(np.float64).eps
    n_clamped = int(np.sum(values < tiny))
    if n_clamped:
        warnings.warn(
            f"{n_clamped} zero {what}(s) clamped to machine epsilon "
            "(duplicate points?)",
            DegenerateDistanceWarning,
            stacklevel=3,
        )
    return np.log(np.maximum(values, tiny))


def _knn_distances(points, k: int, p: float) -> np.ndarray:
    tree = cKDTree(points)
    dists, _ = tree.query(points, k=k + 1, p=p)
    return dists[:, k]


def entropy_differential(est: DifferentialEstimator, data, base: float | None = None) -> float:
    """Differential Shannon entropy of continuous samples, in nats (or in
    the given log base)."""
    if isinstance(est, (KozachenkoLeonenko, Kraskov)):
        points = as_state_space(data)
        require_finite(points)
        n, d = points.shape
        k = est.k if isinstance(est, Kraskov) else 1
        if n < k + 1:
            raise InputTooShortError(k + 1, n, what="sample")
        if isinstance(est, KozachenkoLeonenko):
            dists = _knn_distances(points, 1, p=2)
            log_ball = (d / 2.0) * math.log(math.pi) - gammaln(d / 2.0 + 1.0)
            value = (
                float(digamma(n))
                + _EULER_GAMMA
                + log_ball
                + d * float(np.mean(_clamped_log(dists, "neighbor distance")))
            )
        else:
            dists = _knn_distances(points, k, p=np.inf)
            value = (
                float(digamma(n))
                - float(digamma(k))
                + d * math.log(2.0)
                + d * float(np.mean(_clamped_log(dists, "neighbor distance")))
            )
    else:
        value = _spacing_entropy(est, data)
    if base is not None:
        value /= math.log(base)
    return value


def _spacing_entropy(est: _SpacingEstimator, data) -> float:
    x = as_timeseries(data)
    require_finite(x)
    n = x.shape[0]
    m = est._window(n)
    xs = np.sort(x)
    idx = np.arange(n)
    upper = xs[np.minimum(idx + m, n - 1)]
    lower = xs[np.maximum(idx - m, 0)]
    spacings = upper - lower

    if isinstance(est, Vasicek):
        return float(np.mean(_clamped_log(n * spacings / (2.0 * m), "spacing")))

    if isinstance(est, Ebrahimi):
        ci = np.full(n, 2.0)
        head = idx < m
        tail = idx >= n - m
        ci[head] = 1.0 + (idx[head]) / m
        ci[tail] = 1.0 + (n - 1 - idx[tail]) / m
        return float(np.mean(_clamped_log(n * spacings / (ci * m), "spacing")))

    if isinstance(est, AlizadehArghami):
        ai = np.full(n, 2.0)
        ai[idx < m] = 1.0
        ai[idx >= n - m] = 1.0
        return float(np.mean(_clamped_log(n * spacings / (ai * m), "spacing")))

    if isinstance(est, Correa):
        offsets = np.arange(-m, m + 1)
        window_idx = np.clip(idx[:, None] + offsets[None, :], 0, n - 1)
        window = xs[window_idx]
        centered = window - window.mean(axis=1, keepdims=True)
        num = centered @ offsets.astype(np.float64)
        den = n * np.sum(centered**2, axis=1)
        slopes = np.divide(num, den, out=np.zeros_like(num), where=den > 0)
        return float(-np.mean(_clamped_log(slopes, "local slope")))

    raise TypeError(f"unknown differential estimator: {est!r}")
