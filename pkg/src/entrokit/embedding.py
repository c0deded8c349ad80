"""Delay-coordinate embedding of scalar timeseries."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import as_timeseries
from .errors import InputTooShortError


@dataclass(frozen=True)
class EmbeddingSpec:
    """Embedding dimension ``m`` and delay ``tau`` (both in samples)."""

    m: int
    tau: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("embedding dimension m must be >= 1")
        if self.tau < 1:
            raise ValueError("delay tau must be >= 1")

    @property
    def min_length(self) -> int:
        return (self.m - 1) * self.tau + 1


def delay_embed(x, m: int, tau: int = 1) -> np.ndarray:
    """Embed timeseries ``x`` into m-dimensional delay vectors.

    Point ``i`` is ``(x[i], x[i+tau], ..., x[i+(m-1)tau])``; windows advance
    by stride 1 (fully overlapping), giving ``len(x) - (m-1)*tau`` points.
    The result is a read-only strided view: no data is copied and the point
    dimension is fixed, so downstream loops run allocation-free.
    """
    spec = EmbeddingSpec(m, tau)
    x = as_timeseries(x)
    if x.shape[0] < spec.min_length:
        raise InputTooShortError(spec.min_length, x.shape[0], what="timeseries")
    if m == 1:
        view = x[:, np.newaxis]
    else:
        window = (m - 1) * tau + 1
        view = np.lib.stride_tricks.sliding_window_view(x, window)[:, ::tau]
    view = view[:]
    view.flags.writeable = False
    return view
