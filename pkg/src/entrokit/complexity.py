"""Complexity measures that are not plain PMF functionals.

Each estimator carries its parameters and knows how to evaluate itself on
input data through ``complexity(est, data)``.  Tolerance-based estimators
(sample/approximate entropy) default to r = 0.2 * std(data), the standard
convention; the tolerance is resolved against the data the estimator is
applied to (or once against the original series in multiscale use).
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from . import _kernels
from . import outcome_spaces as _os
from .core import MeasureResult, as_timeseries, require_finite
from .embedding import delay_embed
from .errors import (
    DegenerateSpaceError,
    IncompatibleEstimatorError,
    InputTooShortError,
    UndefinedResultError,
)
from .info_measures import (
    DiscreteEstimator,
    InfoMeasure,
    PlugIn,
    Shannon,
    estimate_discrete,
    measure_maximum,
)
from .outcome_spaces import Dispersion, OutcomeSpace
from .prob_estimators import ProbEstimator, RelativeAmount, estimate_probabilities


class ComplexityEstimator:
    """Base class: a complexity measure plus how to compute it from data."""

    def resolved(self, data) -> "ComplexityEstimator":
        """Fill data-dependent defaults (e.g. tolerance r); returns self if
        there is nothing to resolve."""
        return self

    def evaluate(self, data) -> float:
        raise NotImplementedError


def _resolve_r(r, x):
    return float(r) if r is not None else 0.2 * float(np.std(x))


class _ToleranceEstimator(ComplexityEstimator):
    def resolved(self, data):
        if self.r is not None:
            return self
        x = as_timeseries(data)
        return dataclasses.replace(self, r=_resolve_r(None, x))


@dataclass(frozen=True)
class ApproximateEntropy(_ToleranceEstimator):
    """Entropy rate Phi_m - Phi_{m+1}; Phi is the mean log fraction of
    templates within Chebyshev distance r, self-matches included."""

    m: int = 2
    r: float | None = None
    tau: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("template length m must be >= 1")
        if self.tau < 1:
            raise ValueError("tau must be >= 1")
        if self.r is not None and self.r < 0:
            raise ValueError("tolerance r must be >= 0")

    def evaluate(self, data):
        x = as_timeseries(data)
        require_finite(x)
        if x.shape[0] < self.m * self.tau + 1:
            raise InputTooShortError(self.m * self.tau + 1, x.shape[0])
        r = _resolve_r(self.r, x)
        phis = []
        for mm in (self.m, self.m + 1):
            emb = np.ascontiguousarray(delay_embed(x, mm, self.tau))
            tree = cKDTree(emb)
            counts = tree.query_ball_point(emb, r, p=np.inf, return_length=True)
            phis.append(float(np.mean(np.log(counts / emb.shape[0]))))
        return phis[0] - phis[1]


@dataclass(frozen=True)
class SampleEntropy(_ToleranceEstimator):
    """-ln(A/B): A and B count (m+1)- and m-template pairs within Chebyshev
    distance r, self-matches excluded, both over the same template set.

    Pair counting runs on a KD-tree, not by brute force.  A constant series
    gives A == B and the value 0; B == 0 (or A == 0) means the ratio is
    undefined and raises :class:`UndefinedResultError`.
    """

    m: int = 2
    r: float | None = None
    tau: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("template length m must be >= 1")
        if self.tau < 1:
            raise ValueError("tau must be >= 1")
        if self.r is not None and self.r < 0:
            raise ValueError("tolerance r must be >= 0")

    def match_counts(self, data) -> tuple[int, int]:
        """(A, B) ordered template-match counts used by the estimate."""
        x = as_timeseries(data)
        require_finite(x)
        if x.shape[0] < self.m * self.tau + 2:
            raise InputTooShortError(self.m * self.tau + 2, x.shape[0])
        r = _resolve_r(self.r, x)
        n_templates = x.shape[0] - self.m * self.tau
        counts = []
        for mm in (self.m + 1, self.m):
            emb = np.ascontiguousarray(delay_embed(x, mm, self.tau)[:n_templates])
            tree = cKDTree(emb)
            total = tree.count_neighbors(tree, r, p=np.inf)
            counts.append(int(total) - emb.shape[0])  # drop self-pairs
        return counts[0], counts[1]

    def evaluate(self, data):
        a, b = self.match_counts(data)
        if b == 0 or a == 0:
            raise UndefinedResultError(
                f"sample entropy undefined: A={a}, B={b} template matches"
            )
        if a == b:  # constant series and the like
            return 0.0
        return -math.log(a / b)


@dataclass(frozen=True)
class LempelZiv76(ComplexityEstimator):
    """Number of phrases in the LZ76 exhaustive parsing of a symbol
    sequence.  Input must already be integer symbols; encode real-valued
    data through an outcome space first."""

    def evaluate(self, data):
        seq = np.asarray(data)
        if seq.ndim != 1:
            raise ValueError("LempelZiv76 expects a 1-D symbol sequence")
        if not np.issubdtype(seq.dtype, np.integer):
            raise IncompatibleEstimatorError(
                "LempelZiv76 operates on integer symbols; encode real-valued "
                "data with an outcome space first"
            )
        if seq.size == 0:
            raise InputTooShortError(1, 0)
        return float(_kernels.lz76_phrase_count(np.ascontiguousarray(seq, dtype=np.int64)))


@dataclass(frozen=True)
class ReverseDispersion(ComplexityEstimator):
    """Distance of the dispersion-pattern PMF from uniformity:
    sum (p_i - 1/L)^2 over all L = c^m patterns."""

    m: int = 2
    c: int = 3
    tau: int = 1

    def evaluate(self, data):
        space = Dispersion(m=self.m, c=self.c, tau=self.tau)
        cnts = _os.counts(space, data)
        total = cnts.total_outcomes
        p = cnts.values / cnts.n
        observed = float(np.sum((p - 1.0 / total) ** 2))
        unobserved = (total - len(p)) / total**2
        return observed + unobserved


@dataclass(frozen=True)
class MissingOutcomes(ComplexityEstimator):
    """Fraction of the outcome space absent from the data, for any outcome
    space with finite cardinality."""

    space: OutcomeSpace = field(default_factory=lambda: _os.OrdinalPatterns(m=3))

    def evaluate(self, data):
        total = self.space.total_outcomes(data)
        return _os.missing_outcomes(self.space, data) / total


@dataclass(frozen=True)
class StatisticalComplexity(ComplexityEstimator):
    """C = Q * H_norm: normalized information times the disequilibrium of
    the full-support PMF from uniformity.

    ``distance`` selects the disequilibrium: "jensen-shannon" uses the
    divergence D(p, u) = V((p+u)/2) - V(p)/2 - V(u)/2 built from the chosen
    measure definition V, normalized by its value at a delta PMF (the
    classic constant for Shannon); "euclidean" uses ||p - u||_2 with
    maximum sqrt(1 - 1/L).
    """

    space: OutcomeSpace = field(default_factory=lambda: _os.OrdinalPatterns(m=3))
    probs: ProbEstimator = field(default_factory=RelativeAmount)
    measure: InfoMeasure = field(default_factory=Shannon)
    estimator: DiscreteEstimator = field(default_factory=PlugIn)
    distance: str = "jensen-shannon"

    def __post_init__(self):
        if self.distance not in ("jensen-shannon", "euclidean"):
            raise ValueError(
                f"unknown distance {self.distance!r}; "
                "use 'jensen-shannon' or 'euclidean'"
            )

    def evaluate(self, data):
        cnts = _os.counts(self.space, data)
        total = cnts.total_outcomes
        h_max = measure_maximum(self.measure, total)
        if h_max == 0.0:
            raise DegenerateSpaceError("cannot normalize over a single outcome")
        h_norm = estimate_discrete(self.estimator, self.measure, cnts, self.probs) / h_max

        dense = np.zeros(int(total))
        if self.probs.needs_finite_support:
            dense[:] = estimate_probabilities(self.probs, cnts).values
        else:
            dense[cnts.outcome_ids] = cnts.values / cnts.n
        q = disequilibrium(dense, self.measure, self.distance)
        return q * h_norm


def disequilibrium(pmf, measure: InfoMeasure = Shannon(), distance: str = "jensen-shannon") -> float:
    """Normalized distance of a full-support PMF from the uniform PMF,
    in [0, 1] with 0 at uniform and 1 at a delta PMF."""
    pmf = np.asarray(pmf, dtype=float)
    total = pmf.size
    if total < 2:
        raise DegenerateSpaceError("disequilibrium needs at least 2 outcomes")
    uniform = np.full(total, 1.0 / total)
    if distance == "euclidean":
        d = float(np.linalg.norm(pmf - uniform))
        d_max = math.sqrt(1.0 - 1.0 / total)
    elif distance == "jensen-shannon":
        d = _jensen_divergence(pmf, uniform, measure)
        delta = np.zeros(total)
        delta[0] = 1.0
        d_max = _jensen_divergence(delta, uniform, measure)
    else:
        raise ValueError(f"unknown distance {distance!r}")
    if d_max == 0.0:
        raise DegenerateSpaceError("degenerate disequilibrium normalization")
    return d / d_max


def _jensen_divergence(p, q, measure: InfoMeasure) -> float:
    mid = 0.5 * (p + q)
    return measure.value(mid) - 0.5 * measure.value(p) - 0.5 * measure.value(q)


@dataclass(frozen=True)
class BubbleEntropy(ComplexityEstimator):
    """Scaled difference of the Renyi order-2 entropies (natural log) of
    the swap-count distributions at window lengths m+1 and m:
    (H2_{m+1} - H2_m) / ln((m+1)/(m-1))."""

    m: int
    tau: int = 1

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("window length m must be >= 2")
        if self.tau < 1:
            raise ValueError("tau must be >= 1")

    def evaluate(self, data):
        x = as_timeseries(data)
        require_finite(x)
        if x.shape[0] < self.m * self.tau + 1:
            raise InputTooShortError(self.m * self.tau + 1, x.shape[0])
        h2 = []
        for mm in (self.m, self.m + 1):
            ids = _kernels.inversion_encode(x, mm, self.tau)
            _, counts = np.unique(ids, return_counts=True)
            p = counts / counts.sum()
            h2.append(-math.log(float(np.sum(p**2))))
        return (h2[1] - h2[0]) / math.log((self.m + 1) / (self.m - 1))


def complexity(est: ComplexityEstimator, data) -> MeasureResult:
    """Evaluate a complexity estimator on data."""
    from .info_measures import _data_length

    est = est.resolved(data)
    value = est.evaluate(data)
    return MeasureResult(
        value=float(value),
        recipe=f"complexity(estimator={est!r})",
        n_samples=_data_length(data, getattr(est, "space", None)),
        normalized=False,
    )
