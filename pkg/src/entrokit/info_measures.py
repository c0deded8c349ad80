"""Information-measure definitions, discrete estimators and composition.

A *definition* is a functional of a PMF (Shannon entropy, Renyi entropy,
extropies, ...).  A *discrete estimator* says how to evaluate a definition
from counted data (plug-in, jackknife, bias corrections).  ``information``
composes definition x estimator x probability estimator x outcome space
into one call, and ``information_normalized`` divides by the definition's
maximum over the space's cardinality.

The exact functional forms are documented on each class; zero-probability
entries always contribute zero via the usual continuous extensions
(0 log 0 := 0, and (1-p) log(1-p) := 0 at p = 1 for the extropies).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import gamma as _gamma_fn, gammaincc as _gammaincc

from .core import Counts, MeasureResult, Probabilities, validate_pmf
from .errors import (
    DegenerateSpaceError,
    EmptyCountsError,
    IncompatibleEstimatorError,
    InvalidPMFError,
    NotNormalizableError,
)
from .outcome_spaces import OutcomeSpace
from . import outcome_spaces as _os
from .prob_estimators import (
    ProbEstimator,
    RelativeAmount,
    estimate_probabilities,
    probabilities as _probabilities,
)


# ---------------------------------------------------------------------------
# Definitions

class InfoMeasure:
    """Base class for information-measure definitions (PMF functionals)."""

    def value(self, p: np.ndarray) -> float:
        raise NotImplementedError

    def max_value(self, n_outcomes: int) -> float:
        raise NotImplementedError

    def info_content(self, p: np.ndarray) -> np.ndarray:
        """Per-outcome information content i(p) such that the measure equals
        sum(p * i(p)); only defined for measures with such a decomposition."""
        raise IncompatibleEstimatorError(
            f"{type(self).__name__} has no per-outcome information content"
        )


def _check_base(base: float):
    if not base > 1.0:
        raise ValueError("logarithm base must be > 1")


@dataclass(frozen=True)
class Shannon(InfoMeasure):
    """H = -sum p_i log_b p_i."""

    base: float = 2.0

    def __post_init__(self):
        _check_base(self.base)

    def value(self, p):
        p = p[p > 0]
        return float(-(p @ np.log(p)) / math.log(self.base))

    def max_value(self, n_outcomes):
        return math.log(n_outcomes) / math.log(self.base)

    def info_content(self, p):
        return -np.log(p) / math.log(self.base)


@dataclass(frozen=True)
class Renyi(InfoMeasure):
    """H_q = log_b(sum p_i^q) / (1 - q),  q > 0, q != 1."""

    q: float
    base: float = 2.0

    def __post_init__(self):
        if not self.q > 0 or self.q == 1.0:
            raise ValueError("Renyi order q must be > 0 and != 1")
        _check_base(self.base)

    def value(self, p):
        p = p[p > 0]
        return float(math.log(np.sum(p**self.q)) / (1.0 - self.q) / math.log(self.base))

    def max_value(self, n_outcomes):
        return math.log(n_outcomes) / math.log(self.base)


@dataclass(frozen=True)
class Tsallis(InfoMeasure):
    """H_q = k (1 - sum p_i^q) / (q - 1),  q != 1, k > 0."""

    q: float
    k: float = 1.0

    def __post_init__(self):
        if self.q == 1.0:
            raise ValueError("Tsallis order q must be != 1")
        if not self.k > 0:
            raise ValueError("Tsallis constant k must be > 0")

    def value(self, p):
        p = p[p > 0]
        return float(self.k * (1.0 - np.sum(p**self.q)) / (self.q - 1.0))

    def max_value(self, n_outcomes):
        return self.k * (n_outcomes ** (1.0 - self.q) - 1.0) / (1.0 - self.q)

    def info_content(self, p):
        return self.k * (1.0 - p ** (self.q - 1.0)) / (self.q - 1.0)


@dataclass(frozen=True)
class Kaniadakis(InfoMeasure):
    """H_k = -sum p_i ln_k(p_i) with ln_k(x) = (x^k - x^-k) / (2k)."""

    kappa: float

    def __post_init__(self):
        if not -1.0 < self.kappa < 1.0 or self.kappa == 0.0:
            raise ValueError("kappa must lie in (-1, 1) and differ from 0")

    def value(self, p):
        p = p[p > 0]
        k = self.kappa
        return float(np.sum(p ** (1.0 - k) - p ** (1.0 + k)) / (2.0 * k))

    def max_value(self, n_outcomes):
        k = self.kappa
        return (n_outcomes**k - n_outcomes**-k) / (2.0 * k)

    def info_content(self, p):
        k = self.kappa
        return (p**-k - p**k) / (2.0 * k)


@dataclass(frozen=True)
class Curado(InfoMeasure):
    """H_b = sum (1 - e^{-b p_i}) + e^{-b} - 1,  b > 0."""

    b: float = 1.0

    def __post_init__(self):
        if not self.b > 0:
            raise ValueError("Curado parameter b must be > 0")

    def value(self, p):
        p = p[p > 0]
        return float(np.sum(1.0 - np.exp(-self.b * p)) + math.exp(-self.b) - 1.0)

    def max_value(self, n_outcomes):
        return (
            n_outcomes * (1.0 - math.exp(-self.b / n_outcomes))
            + math.exp(-self.b)
            - 1.0
        )


@dataclass(frozen=True)
class StretchedExponential(InfoMeasure):
    """Anteneodo-Plastino entropy S_eta = sum [G(s, -ln p_i) - p_i G(s)]
    with s = (eta+1)/eta and G the upper incomplete gamma function.

    The functional is defined in nats; the ``base`` parameter rescales by
    1/ln(base), which preserves the eta -> 1 reduction to Shannon entropy
    in every base.
    """

    eta: float = 2.0
    base: float = 2.0

    def __post_init__(self):
        if not self.eta > 0:
            raise ValueError("eta must be > 0")
        _check_base(self.base)

    @property
    def _s(self):
        return (self.eta + 1.0) / self.eta

    def value(self, p):
        p = p[p > 0]
        s = self._s
        upper = _gammaincc(s, -np.log(p)) * _gamma_fn(s)
        return float(np.sum(upper - p * _gamma_fn(s)) / math.log(self.base))

    def max_value(self, n_outcomes):
        s = self._s
        upper = _gammaincc(s, math.log(n_outcomes)) * _gamma_fn(s)
        return (n_outcomes * upper - _gamma_fn(s)) / math.log(self.base)


@dataclass(frozen=True)
class ShannonExtropy(InfoMeasure):
    """J = -sum (1 - p_i) log_b(1 - p_i); maximized at the uniform PMF
    with value (L-1) log_b(L / (L-1))."""

    base: float = 2.0

    def __post_init__(self):
        _check_base(self.base)

    def value(self, p):
        q = 1.0 - p[p < 1.0]
        if q.size == 0:
            return 0.0
        return float(-(q @ np.log(q)) / math.log(self.base))

    def max_value(self, n_outcomes):
        if n_outcomes == 1:
            return 0.0
        return (n_outcomes - 1) * math.log(n_outcomes / (n_outcomes - 1.0)) / math.log(self.base)


@dataclass(frozen=True)
class RenyiExtropy(InfoMeasure):
    """J_q = (n-1)/(1-q) * log_b( sum (1-p_i)^q / (n-1) ) over the n-entry
    PMF; reduces to the Shannon extropy as q -> 1 and shares its maximum
    (L-1) log_b(L/(L-1)), independently of q."""

    q: float
    base: float = 2.0

    def __post_init__(self):
        if not self.q > 0 or self.q == 1.0:
            raise ValueError("Renyi extropy order q must be > 0 and != 1")
        _check_base(self.base)

    def value(self, p):
        n = p.size
        if n <= 1:
            return 0.0
        total = float(np.sum((1.0 - p) ** self.q))
        return float(
            (n - 1)
            / (1.0 - self.q)
            * math.log(total / (n - 1))
            / math.log(self.base)
        )

    def max_value(self, n_outcomes):
        if n_outcomes == 1:
            return 0.0
        return (n_outcomes - 1) * math.log(n_outcomes / (n_outcomes - 1.0)) / math.log(self.base)


@dataclass(frozen=True)
class TsallisExtropy(InfoMeasure):
    """J_q = sum [(1 - p_i) - (1 - p_i)^q] / (q - 1),  q != 1."""

    q: float

    def __post_init__(self):
        if self.q == 1.0:
            raise ValueError("Tsallis extropy order q must be != 1")

    def value(self, p):
        c = 1.0 - p
        return float(np.sum(c - c**self.q) / (self.q - 1.0))

    def max_value(self, n_outcomes):
        if n_outcomes == 1:
            return 0.0
        L = n_outcomes
        return ((L - 1) - L ** (1.0 - self.q) * (L - 1.0) ** self.q) / (self.q - 1.0)


@dataclass(frozen=True)
class FluctuationComplexity(InfoMeasure):
    """Standard deviation of the inner measure's per-outcome information:
    sqrt( sum p_i (i_i - H)^2 ), zero on both delta and uniform PMFs.

    The inner measure must admit a per-outcome information content
    (Shannon, Tsallis, Kaniadakis); it defaults to Shannon.  There is no
    analytic maximum, so this definition cannot be normalized.
    """

    inner: InfoMeasure = field(default_factory=Shannon)

    def __post_init__(self):
        # fail at construction, not first use
        self.inner.info_content(np.array([0.5, 0.5]))

    def value(self, p):
        p = p[p > 0]
        info = self.inner.info_content(p)
        h = float(p @ info)
        return float(math.sqrt(p @ (info - h) ** 2))

    def max_value(self, n_outcomes):
        raise NotNormalizableError(
            "fluctuation complexity vanishes at the uniform PMF; "
            "it has no maximum to normalize by"
        )


# ---------------------------------------------------------------------------
# Discrete estimators

class DiscreteEstimator:
    shannon_only = False


@dataclass(frozen=True)
class PlugIn(DiscreteEstimator):
    """Evaluate the definition directly on the estimated PMF (naive)."""


@dataclass(frozen=True)
class Jackknife(DiscreteEstimator):
    """Leave-one-window-out bias correction:
    N * theta - (N-1)/N * sum_j theta_(minus j)."""


@dataclass(frozen=True)
class MillerMadow(DiscreteEstimator):
    """Plug-in Shannon entropy plus (K - 1) / (2 N ln b) with K the number
    of observed outcomes."""

    shannon_only = True


@dataclass(frozen=True)
class ChaoShen(DiscreteEstimator):
    """Coverage-adjusted Shannon estimator: probabilities are deflated by
    the sample coverage C = 1 - f1/N (f1 = singleton count) and each term
    is inflated by the inclusion probability 1 - (1 - C p_i)^N."""

    shannon_only = True


@dataclass(frozen=True)
class HorvitzThompson(DiscreteEstimator):
    """Shannon estimator reweighting each term by the outcome's inclusion
    probability 1 - (1 - p_i)^N."""

    shannon_only = True


# ---------------------------------------------------------------------------
# Evaluation

def measure_value(definition: InfoMeasure, p) -> float:
    """Evaluate a definition on a PMF."""
    values = p.values if isinstance(p, Probabilities) else np.asarray(p, dtype=float)
    if not validate_pmf(values):
        raise InvalidPMFError(f"not a valid PMF: {values!r}")
    return definition.value(values)


def measure_maximum(definition: InfoMeasure, n_outcomes: int) -> float:
    """Maximum of the definition over all PMFs with ``n_outcomes`` entries."""
    if n_outcomes < 1:
        raise ValueError("n_outcomes must be >= 1")
    return definition.max_value(int(n_outcomes))


def _check_compat(est: DiscreteEstimator, definition: InfoMeasure):
    if est.shannon_only and not isinstance(definition, Shannon):
        raise IncompatibleEstimatorError(
            f"{type(est).__name__} estimates Shannon entropy only, "
            f"not {type(definition).__name__}"
        )


def _plugin_from_counts(definition, cnts, probs):
    return measure_value(definition, estimate_probabilities(probs, cnts))


def estimate_discrete(
    est: DiscreteEstimator,
    definition: InfoMeasure,
    cnts: Counts,
    probs: ProbEstimator = RelativeAmount(),
) -> float:
    """Estimate a definition from counts with the given estimator.

    The probability estimator feeds the plug-in part; the bias-corrected
    Shannon estimators reduce to their textbook forms under RelativeAmount.
    """
    _check_compat(est, definition)
    if cnts.n == 0:
        raise EmptyCountsError("no counted windows")
    observed = cnts.values > 0
    values = cnts.values[observed]
    ids = cnts.outcome_ids[observed] if cnts.outcome_ids is not None else None
    n = cnts.n

    if isinstance(est, PlugIn):
        return _plugin_from_counts(definition, cnts, probs)

    if isinstance(est, Jackknife):
        if n < 2:
            raise EmptyCountsError("jackknife needs at least 2 windows")
        theta = _plugin_from_counts(definition, cnts, probs)
        loo_sum = 0.0
        for i in range(len(values)):
            reduced = values.copy()
            reduced[i] -= 1
            keep = reduced > 0
            reduced_cnt = Counts(
                reduced[keep], cnts.total_outcomes,
                outcome_ids=None if ids is None else ids[keep],
            )
            loo_sum += values[i] * _plugin_from_counts(definition, reduced_cnt, probs)
        return float(n * theta - (n - 1) / n * loo_sum)

    log_b = math.log(definition.base)

    if isinstance(est, MillerMadow):
        k_hat = len(values)
        return _plugin_from_counts(definition, cnts, probs) + (k_hat - 1) / (
            2.0 * n * log_b
        )

    pmf = estimate_probabilities(probs, cnts).values

    if isinstance(est, ChaoShen):
        f1 = int(np.sum(values == 1))
        if f1 == n:
            f1 = n - 1
        coverage = 1.0 - f1 / n
        adj = coverage * pmf[pmf > 0]
        inclusion = 1.0 - (1.0 - adj) ** n
        return float(-np.sum(adj * np.log(adj) / inclusion) / log_b)

    if isinstance(est, HorvitzThompson):
        pos = pmf[pmf > 0]
        inclusion = 1.0 - (1.0 - pos) ** n
        # a certain outcome (p = 1) has inclusion probability exactly 1
        inclusion[pos >= 1.0] = 1.0
        return float(-np.sum(pos * np.log(pos) / inclusion) / log_b)

    raise IncompatibleEstimatorError(f"unknown discrete estimator: {est!r}")


# ---------------------------------------------------------------------------
# Composed pipeline

def _tag(err, axis):
    err.axis = axis
    return err


def _data_length(data, space=None) -> int:
    """Sample count: points for (N, D) state-space input, pixels for the
    2-D arrays consumed whole by spatial spaces."""
    from .outcome_spaces import SpatialDispersion, SpatialOrdinalPatterns

    arr = np.asarray(data)
    if arr.ndim == 2 and isinstance(space, (SpatialOrdinalPatterns, SpatialDispersion)):
        return int(arr.size)
    return int(arr.shape[0])


def _recipe_string(definition, probs, space, est, normalized):
    return (
        f"information(measure={definition!r}, estimator={est!r}, "
        f"probs={probs!r}, space={space!r}, normalized={normalized})"
    )


def information(
    definition: InfoMeasure,
    probs: ProbEstimator,
    space: OutcomeSpace,
    data,
    estimator: DiscreteEstimator = PlugIn(),
) -> MeasureResult:
    """Estimate an information measure through the full discrete pipeline:
    discretize -> count -> estimate probabilities -> evaluate the measure."""
    _check_compat(estimator, definition)
    if not space.counting:
        if not isinstance(estimator, PlugIn):
            raise IncompatibleEstimatorError(
                f"{type(estimator).__name__} needs integer counts; "
                f"{type(space).__name__} is non-counting"
            )
        try:
            pmf = _probabilities(probs, space, data)
        except Exception as err:
            raise _tag(err, "probabilities")
        value = measure_value(definition, pmf)
    else:
        try:
            cnts = _os.counts(space, data)
        except Exception as err:
            raise _tag(err, "outcome_space")
        try:
            value = estimate_discrete(estimator, definition, cnts, probs)
        except Exception as err:
            raise _tag(err, "measure_estimation")
    return MeasureResult(
        value=float(value),
        recipe=_recipe_string(definition, probs, space, estimator, False),
        n_samples=_data_length(data, space),
        normalized=False,
    )


def information_normalized(
    definition: InfoMeasure,
    probs: ProbEstimator,
    space: OutcomeSpace,
    data,
    estimator: DiscreteEstimator = PlugIn(),
) -> MeasureResult:
    """`information` divided by the definition's maximum over the space's
    cardinality; the result lies in [0, 1] for well-behaved estimators."""
    raw = information(definition, probs, space, data, estimator=estimator)
    total = space.total_outcomes(data)
    maximum = measure_maximum(definition, total)
    if maximum == 0.0:
        raise DegenerateSpaceError(
            f"cannot normalize over a space with {total} outcome(s): maximum is 0"
        )
    return MeasureResult(
        value=raw.value / maximum,
        recipe=_recipe_string(definition, probs, space, estimator, True),
        n_samples=raw.n_samples,
        normalized=True,
    )
