"""Uniform recipe objects for the three measure families.

A recipe bundles every axis choice needed to compute one measure, so batch
front-ends and the multiscale driver can treat discrete-information,
differential and complexity measures through one interface:
``apply_measure(recipe, data) -> MeasureResult``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .complexity import ComplexityEstimator, complexity
from .core import MeasureResult
from .differential import DifferentialEstimator, entropy_differential
from .errors import ConfigError
from .info_measures import (
    DiscreteEstimator,
    InfoMeasure,
    PlugIn,
    information,
    information_normalized,
)
from .outcome_spaces import OutcomeSpace
from .prob_estimators import ProbEstimator, RelativeAmount


@dataclass(frozen=True)
class InformationRecipe:
    """Discrete pipeline: outcome space x probability estimator x
    definition x measure estimator, optionally normalized."""

    measure: InfoMeasure
    space: OutcomeSpace
    probs: ProbEstimator = field(default_factory=RelativeAmount)
    estimator: DiscreteEstimator = field(default_factory=PlugIn)
    normalized: bool = False

    def apply(self, data) -> MeasureResult:
        fn = information_normalized if self.normalized else information
        return fn(self.measure, self.probs, self.space, data, estimator=self.estimator)


@dataclass(frozen=True)
class DifferentialRecipe:
    """Differential Shannon entropy of the raw samples."""

    estimator: DifferentialEstimator
    base: float | None = None  # None = nats

    def apply(self, data) -> MeasureResult:
        value = entropy_differential(self.estimator, data, base=self.base)
        arr = np.asarray(data)
        return MeasureResult(
            value=value,
            recipe=f"differential(estimator={self.estimator!r}, base={self.base})",
            n_samples=int(arr.shape[0]),
            normalized=False,
        )


def resolve_measure(measure, data):
    """Fix any data-dependent defaults (e.g. tolerance r) once, against
    ``data``; recipes without such defaults pass through unchanged."""
    if isinstance(measure, ComplexityEstimator):
        return measure.resolved(data)
    return measure


def apply_measure(measure, data) -> MeasureResult:
    """Evaluate any recipe (information, differential or complexity)."""
    if isinstance(measure, (InformationRecipe, DifferentialRecipe)):
        return measure.apply(data)
    if isinstance(measure, ComplexityEstimator):
        return complexity(measure, data)
    raise ConfigError(f"not a measure recipe: {measure!r}")
