"""Probability estimators: turn counts into probability mass functions.

``RelativeAmount`` is plain maximum-likelihood (relative frequency) over
the observed outcomes.  The smoothing estimators (add-constant, Bayesian
regularization, James-Stein shrinkage) spread mass over the *full* outcome
space and therefore require a finite, computable cardinality.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Counts, Probabilities
from .errors import (
    EmptyCountsError,
    NonCountingSpaceError,
    UncountableOutcomeSpaceError,
)
from .outcome_spaces import OutcomeSpace
from . import outcome_spaces as _os

# full-support expansion beyond this many outcomes would silently allocate
# gigabytes; refuse instead.
_MAX_DENSE_SUPPORT = 50_000_000


class ProbEstimator:
    """Base class for probability estimators."""

    #: smoothing estimators need the full outcome space
    needs_finite_support = True

    def _estimate(self, values: np.ndarray, total: int) -> np.ndarray:
        raise NotImplementedError


@dataclass(frozen=True)
class RelativeAmount(ProbEstimator):
    """Relative frequency (plug-in / maximum likelihood) estimation."""

    needs_finite_support = False

    def _estimate(self, values, total):
        return values / values.sum()


@dataclass(frozen=True)
class AddConstant(ProbEstimator):
    """Add a constant pseudo-count c to every outcome: (n_i + c)/(N + cL)."""

    c: float = 1.0

    def __post_init__(self):
        if not self.c > 0:
            raise ValueError("additive constant c must be > 0")

    def _estimate(self, values, total):
        n = values.sum()
        return (values + self.c) / (n + self.c * total)


@dataclass(frozen=True)
class BayesianRegularization(ProbEstimator):
    """Dirichlet-prior posterior mean with concentration a per outcome."""

    a: float = 1.0

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError("concentration a must be > 0")

    def _estimate(self, values, total):
        n = values.sum()
        return (values + self.a) / (n + self.a * total)


@dataclass(frozen=True)
class Shrinkage(ProbEstimator):
    """James-Stein shrinkage towards the uniform distribution.

    p_i = lam/L + (1 - lam) * n_i/N.  When ``lam`` is None it is estimated
    by the plug-in formula

        lam* = (1 - sum(p_hat^2)) / ((N - 1) * sum((1/L - p_hat)^2)),

    clamped to [0, 1]; degenerate cases (N = 1, or maximum-likelihood
    already uniform) shrink fully.
    """

    lam: float | None = None

    def __post_init__(self):
        if self.lam is not None and not 0.0 <= self.lam <= 1.0:
            raise ValueError("shrinkage intensity lam must be in [0, 1]")

    def _estimate(self, values, total):
        n = values.sum()
        ml = values / n
        target = 1.0 / total
        lam = self.lam
        if lam is None:
            denom = (n - 1) * float(np.sum((target - ml) ** 2))
            if denom <= 0.0:
                lam = 1.0
            else:
                lam = float((1.0 - np.sum(ml**2)) / denom)
                lam = min(max(lam, 0.0), 1.0)
        return lam * target + (1.0 - lam) * ml


def _full_support_counts(cnts: Counts) -> np.ndarray:
    """Dense count vector over all outcomes, zeros included."""
    total = cnts.total_outcomes
    if total > _MAX_DENSE_SUPPORT:
        raise UncountableOutcomeSpaceError(
            f"cannot expand {total} outcomes into a dense support"
        )
    if cnts.outcome_ids is None:
        if len(cnts.values) != total:
            raise UncountableOutcomeSpaceError(
                "counts lack outcome ids; cannot place them in the full support"
            )
        return cnts.values.astype(np.float64)
    dense = np.zeros(int(total), dtype=np.float64)
    dense[cnts.outcome_ids] = cnts.values
    return dense


def estimate_probabilities(est: ProbEstimator, cnts: Counts) -> Probabilities:
    """PMF from counts: observed support for RelativeAmount, full outcome
    space for the smoothing estimators."""
    if cnts.n == 0:
        raise EmptyCountsError("cannot estimate probabilities from zero counts")
    if isinstance(est, RelativeAmount):
        values = est._estimate(cnts.values.astype(np.float64), cnts.total_outcomes)
        return Probabilities(values, outcome_ids=cnts.outcome_ids)
    dense = _full_support_counts(cnts)
    values = est._estimate(dense, cnts.total_outcomes)
    return Probabilities(values, outcome_ids=np.arange(len(dense), dtype=np.int64))


def probabilities(est: ProbEstimator, o: OutcomeSpace, data) -> Probabilities:
    """PMF over the outcomes the estimator supports (observed outcomes for
    RelativeAmount, the full space for smoothing estimators)."""
    if not o.counting:
        if not isinstance(est, RelativeAmount):
            raise NonCountingSpaceError(
                f"{type(o).__name__} is non-counting; only RelativeAmount applies"
            )
        weights = o.spectral_weights(data)
        total = weights.sum()
        if total <= 0.0:
            raise EmptyCountsError("zero total spectral power (all-zero input?)")
        return Probabilities(
            weights / total,
            outcome_ids=np.arange(len(weights), dtype=np.int64),
        )
    return estimate_probabilities(est, _os.counts(o, data))


def allprobabilities(est: ProbEstimator, o: OutcomeSpace, data) -> Probabilities:
    """PMF over all ``total_outcomes(o)`` outcomes, zero-probability
    outcomes included, aligned with outcome-id order."""
    if not o.counting:
        return probabilities(est, o, data)
    cnts = _os.counts(o, data)
    if cnts.n == 0:
        raise EmptyCountsError("cannot estimate probabilities from zero counts")
    dense = _full_support_counts(cnts)
    if isinstance(est, RelativeAmount):
        values = dense / dense.sum()
    else:
        values = est._estimate(dense, cnts.total_outcomes)
    return Probabilities(values, outcome_ids=np.arange(len(dense), dtype=np.int64))
