"""Shared data model: counts, probabilities, outcomes and measure results.

Conventions used throughout the package:

* a timeseries is a 1-D float64 array,
* a state-space set is a (N, D) float64 array of N points with fixed
  dimension D (the point dimension is frozen at construction, which is what
  lets the hot kernels iterate without per-point allocation),
* outcome ids are non-negative int64 indices into an outcome space.

All containers defined here are immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonFiniteDataError

#: absolute tolerance of the unit-sum check on probability vectors.  Double
#: precision accumulation over <= 1e7 outcomes stays well inside this bound.
PMF_ATOL = 1e-12


def _frozen_array(values, dtype):
    arr = np.array(values, dtype=dtype, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Outcome:
    """One outcome of an outcome space: integer id plus decoded label.

    The label is the human-readable form (permutation tuple, bin edges,
    symbol word, ...); ids index into the generating space.
    """

    id: int
    label: object

    def __post_init__(self):
        if self.id < 0:
            raise ValueError("outcome id must be non-negative")


@dataclass(frozen=True)
class Counts:
    """Occurrence counts over an outcome space.

    Only observed outcomes need to be stored; ``total_outcomes`` carries the
    full cardinality of the space, which may be (astronomically) larger than
    ``len(values)``.  ``outcome_ids`` aligns each count with its outcome id;
    it is ``None`` for spaces whose outcomes cannot be addressed by a 64-bit
    id (e.g. huge high-dimensional binnings).
    """

    values: np.ndarray
    total_outcomes: int
    outcome_ids: np.ndarray | None = None

    def __post_init__(self):
        values = _frozen_array(self.values, np.int64)
        if values.ndim != 1:
            raise ValueError("counts must be a 1-D vector")
        if np.any(values < 0):
            raise ValueError("counts must be non-negative")
        object.__setattr__(self, "values", values)
        if self.total_outcomes < 1:
            raise ValueError("total_outcomes must be positive")
        if self.outcome_ids is not None:
            ids = _frozen_array(self.outcome_ids, np.int64)
            if ids.shape != values.shape:
                raise ValueError("outcome_ids must align with values")
            object.__setattr__(self, "outcome_ids", ids)

    @property
    def n(self) -> int:
        """Total number of counted windows."""
        return int(self.values.sum())


@dataclass(frozen=True)
class Probabilities:
    """A probability mass function, optionally aligned with outcome ids."""

    values: np.ndarray
    outcome_ids: np.ndarray | None = None

    def __post_init__(self):
        values = _frozen_array(self.values, np.float64)
        if values.ndim != 1:
            raise ValueError("probabilities must be a 1-D vector")
        object.__setattr__(self, "values", values)
        if self.outcome_ids is not None:
            ids = _frozen_array(self.outcome_ids, np.int64)
            if ids.shape != values.shape:
                raise ValueError("outcome_ids must align with values")
            object.__setattr__(self, "outcome_ids", ids)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class MeasureResult:
    """A scalar measure value plus full provenance of how it was computed."""

    value: float
    recipe: str
    n_samples: int
    normalized: bool = False

    def __post_init__(self):
        if self.normalized and np.isfinite(self.value):
            if not (-PMF_ATOL <= self.value <= 1.0 + PMF_ATOL):
                raise ValueError(
                    f"normalized value {self.value} outside [0, 1]"
                )


def validate_pmf(p) -> bool:
    """True iff ``p`` is non-negative and sums to 1 within ``PMF_ATOL``.

    Pure predicate: never raises on bad input.
    """
    values = p.values if isinstance(p, Probabilities) else np.asarray(p, dtype=float)
    if values.ndim != 1 or values.size == 0:
        return False
    if not np.all(np.isfinite(values)):
        return False
    if np.any(values < 0.0):
        return False
    return abs(float(values.sum()) - 1.0) <= PMF_ATOL


def as_timeseries(x) -> np.ndarray:
    """Coerce input to a 1-D float64 timeseries (no finiteness check)."""
    arr = np.ascontiguousarray(x, dtype=np.float64)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D timeseries, got shape {arr.shape}")
    return arr


def as_state_space(points) -> np.ndarray:
    """Coerce input to a (N, D) float64 state-space set.

    1-D input is treated as N points of dimension 1.
    """
    arr = np.ascontiguousarray(points, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"expected (N, D) points, got shape {arr.shape}")
    return arr


def require_finite(arr):
    """Raise :class:`NonFiniteDataError` naming the first offending index."""
    finite = np.isfinite(arr)
    if not finite.all():
        idx = int(np.flatnonzero(~finite.ravel())[0])
        raise NonFiniteDataError(idx)
    return arr
