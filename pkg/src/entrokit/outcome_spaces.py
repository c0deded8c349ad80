"""Outcome spaces: discretize data into integer outcomes and counts.

Every space maps input data to one int64 id per window (or per stencil
placement for the spatial variants).  Ids are stable across calls, live in
``[0, total_outcomes)``, and decode back to a human-readable label
(permutation tuple, bin edges, symbol word, swap count).

Counting-based spaces support the full probability-estimator catalog;
``PowerSpectrum`` is non-counting (its "counts" are spectral weights) and
composes only with relative-frequency estimation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

import numpy as np
from scipy.special import ndtr

from . import _kernels
from .core import Counts, as_timeseries, as_state_space, require_finite
from .embedding import delay_embed
from .errors import (
    CardinalityOverflowError,
    InputTooShortError,
    NonCountingSpaceError,
    UncountableOutcomeSpaceError,
)

_INT64_MAX = 2**63 - 1


# ---------------------------------------------------------------------------
# Lehmer coding of permutations

def lehmer_encode(perm) -> int:
    """Rank a permutation of ``0..m-1`` into ``[0, m!)`` (lexicographic).

    Bijective for m <= 12 (13! would not fit in an int64 id).
    """
    perm = [int(v) for v in perm]
    m = len(perm)
    if not 1 <= m <= 12:
        raise ValueError("permutation length must be in 1..12")
    if sorted(perm) != list(range(m)):
        raise ValueError(f"{perm} is not a permutation of 0..{m - 1}")
    code = 0
    for i in range(m - 1):
        smaller_after = sum(1 for j in range(i + 1, m) if perm[j] < perm[i])
        code += smaller_after * factorial(m - 1 - i)
    return code


def lehmer_decode(code: int, m: int) -> tuple:
    """Inverse of :func:`lehmer_encode`."""
    if not 1 <= m <= 12:
        raise ValueError("permutation length must be in 1..12")
    if not 0 <= code < factorial(m):
        raise ValueError(f"code {code} outside [0, {m}!)")
    digits = []
    for i in range(m - 1, 0, -1):
        f = factorial(i)
        digits.append(code // f)
        code %= f
    digits.append(0)
    remaining = list(range(m))
    return tuple(remaining.pop(d) for d in digits)


def _rank_vector_to_sort_order(rank_vector) -> tuple:
    """Invert a rank vector into the index order that sorts the window."""
    order = [0] * len(rank_vector)
    for idx, rank in enumerate(rank_vector):
        order[rank] = idx
    return tuple(order)


# ---------------------------------------------------------------------------
# Base class

class OutcomeSpace:
    """Base class for all outcome spaces."""

    counting = True

    def total_outcomes(self, data=None) -> int:
        raise NotImplementedError

    def encode(self, data) -> np.ndarray:
        raise NotImplementedError

    def decode(self, outcome_id: int):
        raise NotImplementedError

    # Spaces whose labels depend on the data (unique values, bin edges)
    # override this.
    def observed_outcomes(self, data, ids=None):
        if ids is None:
            ids = np.unique(self.encode(data))
        return [self.decode(int(i)) for i in ids]

    def _counts(self, data) -> Counts:
        ids = self.encode(data)
        total = self._total_big(data)
        if total <= 65536:
            # O(N) tally without the sort np.unique would do
            dense = np.bincount(ids, minlength=total)
            observed = np.flatnonzero(dense)
            return Counts(dense[observed], total, outcome_ids=observed)
        observed, values = np.unique(ids, return_counts=True)
        return Counts(values, total, outcome_ids=observed)

    # Exact cardinality as a Python int, used to populate Counts even when
    # it exceeds the 64-bit id range (sparse high-dimensional binnings).
    def _total_big(self, data=None) -> int:
        return self.total_outcomes(data)


def _check_total(total: int) -> int:
    if total > _INT64_MAX:
        raise CardinalityOverflowError(
            f"outcome-space cardinality {total} exceeds 2^63 - 1"
        )
    return total


def _prepared_series(data, min_length: int, what="timeseries") -> np.ndarray:
    x = as_timeseries(data)
    require_finite(x)
    if x.shape[0] < min_length:
        raise InputTooShortError(min_length, x.shape[0], what=what)
    return x


# ---------------------------------------------------------------------------
# Timeseries spaces

@dataclass(frozen=True)
class UniqueElements(OutcomeSpace):
    """Each distinct value of the input is its own outcome.

    Cardinality is only known a posteriori, so ``total_outcomes`` requires
    data and ``missing_outcomes`` is unsupported.
    """

    def total_outcomes(self, data=None) -> int:
        if data is None:
            raise UncountableOutcomeSpaceError(
                "UniqueElements has no a-priori cardinality; pass data"
            )
        return int(np.unique(self._values(data)).size)

    def _values(self, data):
        x = np.asarray(data)
        if x.ndim != 1:
            raise ValueError("UniqueElements expects a 1-D sequence")
        if x.size < 1:
            raise InputTooShortError(1, 0)
        if np.issubdtype(x.dtype, np.floating):
            require_finite(x)
        return x

    def encode(self, data) -> np.ndarray:
        _, inverse = np.unique(self._values(data), return_inverse=True)
        return inverse.astype(np.int64)

    def _counts(self, data) -> Counts:
        uniq, inverse = np.unique(self._values(data), return_inverse=True)
        values = np.bincount(inverse, minlength=len(uniq))
        return Counts(values, len(uniq), outcome_ids=np.arange(len(uniq)))

    def decode(self, outcome_id: int):
        raise UncountableOutcomeSpaceError(
            "UniqueElements labels are data-dependent; use outcomes(o, data)"
        )

    def observed_outcomes(self, data, ids=None):
        uniq = np.unique(self._values(data))
        if ids is not None:
            uniq = uniq[np.asarray(ids)]
        return list(uniq)


def _bin_geometry(points, bin_width=None, n_bins=None):
    """Per-axis (mins, widths, bin counts) for a rectangular binning.

    The data range is [min, max] per axis with the right-most bin closed;
    a zero-span axis degenerates to a single bin.
    """
    mins = points.min(axis=0)
    maxs = points.max(axis=0)
    spans = maxs - mins
    if bin_width is not None:
        widths = np.full(points.shape[1], float(bin_width))
        nbins = np.maximum(np.ceil(spans / widths - 1e-12).astype(np.int64), 1)
    else:
        nbins = np.full(points.shape[1], int(n_bins), dtype=np.int64)
        widths = spans / nbins
    return mins, widths, nbins


def _bin_coords(points, mins, widths, nbins):
    """Integer bin coordinates per point; points at the max edge fold into
    the last (closed) bin, zero-width axes map everything to bin 0."""
    safe = np.where(widths > 0, widths, 1.0)
    coords = np.floor((points - mins) / safe).astype(np.int64)
    np.clip(coords, 0, nbins - 1, out=coords)
    return coords


@dataclass(frozen=True)
class ValueBinning(OutcomeSpace):
    """Rectangular (histogram) binning of values or state-space points.

    Exactly one of ``bin_width`` (edge length per axis) or ``n_bins``
    (bin count per axis) must be given.  The range is taken from the data,
    so cardinality is resolved only against data.  Counting never allocates
    a dense grid: occupied bins are aggregated sparsely.
    """

    bin_width: float | None = None
    n_bins: int | None = None

    def __post_init__(self):
        if (self.bin_width is None) == (self.n_bins is None):
            raise ValueError("give exactly one of bin_width or n_bins")
        if self.bin_width is not None and not self.bin_width > 0:
            raise ValueError("bin_width must be > 0")
        if self.n_bins is not None and self.n_bins < 1:
            raise ValueError("n_bins must be >= 1")

    def _points(self, data):
        pts = as_state_space(data)
        require_finite(pts)
        return pts

    def _geometry(self, data):
        return _bin_geometry(self._points(data), self.bin_width, self.n_bins)

    def total_outcomes(self, data=None) -> int:
        return _check_total(self._total_big(data))

    def _total_big(self, data=None) -> int:
        if data is None:
            raise UncountableOutcomeSpaceError(
                "ValueBinning range is data-derived; pass data"
            )
        _, _, nbins = self._geometry(data)
        return int(np.prod([int(v) for v in nbins], dtype=object))

    def encode(self, data) -> np.ndarray:
        pts = self._points(data)
        mins, widths, nbins = _bin_geometry(pts, self.bin_width, self.n_bins)
        _check_total(int(np.prod([int(v) for v in nbins], dtype=object)))
        coords = _bin_coords(pts, mins, widths, nbins)
        return np.ravel_multi_index(coords.T, nbins).astype(np.int64)

    def _counts(self, data) -> Counts:
        pts = self._points(data)
        mins, widths, nbins = _bin_geometry(pts, self.bin_width, self.n_bins)
        coords = _bin_coords(pts, mins, widths, nbins)
        total = int(np.prod([int(v) for v in nbins], dtype=object))
        uniq, values = np.unique(coords, axis=0, return_counts=True)
        if total <= _INT64_MAX:
            ids = np.ravel_multi_index(uniq.T, nbins).astype(np.int64)
        else:
            ids = None
        return Counts(values, total, outcome_ids=ids)

    def decode(self, outcome_id: int):
        raise UncountableOutcomeSpaceError(
            "ValueBinning bin edges are data-dependent; use outcomes(o, data)"
        )

    def observed_outcomes(self, data, ids=None):
        pts = self._points(data)
        mins, widths, nbins = _bin_geometry(pts, self.bin_width, self.n_bins)
        coords = _bin_coords(pts, mins, widths, nbins)
        uniq = np.unique(coords, axis=0)
        edges = [
            tuple(
                (float(mins[d] + c * widths[d]), float(mins[d] + (c + 1) * widths[d]))
                for d, c in enumerate(row)
            )
            for row in uniq
        ]
        if pts.shape[1] == 1:
            edges = [e[0] for e in edges]
        return edges


@dataclass(frozen=True)
class OrdinalPatterns(OutcomeSpace):
    """Ordinal (permutation) patterns of m-dimensional delay windows.

    A window's id is the Lehmer rank of its rank vector; ties are broken by
    a stable rule (the earlier index ranks lower).  Labels decode to the
    index order that sorts the window ascending.
    """

    m: int = 3
    tau: int = 1

    def __post_init__(self):
        if not 2 <= self.m <= 12:
            raise ValueError("ordinal pattern order m must be in 2..12")
        if self.tau < 1:
            raise ValueError("tau must be >= 1")

    @property
    def _min_length(self):
        return (self.m - 1) * self.tau + 1

    def total_outcomes(self, data=None) -> int:
        return factorial(self.m)

    def encode(self, data) -> np.ndarray:
        x = _prepared_series(data, self._min_length)
        return _kernels.ordinal_encode(x, self.m, self.tau)

    def decode(self, outcome_id: int) -> tuple:
        return _rank_vector_to_sort_order(lehmer_decode(int(outcome_id), self.m))


@dataclass(frozen=True)
class Dispersion(OutcomeSpace):
    """Dispersion patterns: Gaussian-CDF symbolization into c categories,
    then base-c words over m-element delay windows.

    Values are standardized with the sample mean/std, mapped through the
    normal CDF into (0, 1) and partitioned into c equal-width categories
    (symbols 1..c); each window is read as a base-c word, most significant
    symbol first.
    """

    m: int = 2
    c: int = 3
    tau: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("word length m must be >= 1")
        if self.c < 2:
            raise ValueError("category count c must be >= 2")
        if self.tau < 1:
            raise ValueError("tau must be >= 1")
        if self.c**self.m > _INT64_MAX:
            raise CardinalityOverflowError(
                f"c^m = {self.c}^{self.m} exceeds 2^63 - 1"
            )

    @property
    def _min_length(self):
        return (self.m - 1) * self.tau + 1

    def total_outcomes(self, data=None) -> int:
        return self.c**self.m

    def symbolize(self, data) -> np.ndarray:
        """Per-point category symbols in 0..c-1."""
        x = _prepared_series(data, self._min_length)
        return _gaussian_cdf_symbols(x, self.c)

    def encode(self, data) -> np.ndarray:
        return _word_encode(self.symbolize(data), self.m, self.tau, self.c)

    def decode(self, outcome_id: int) -> tuple:
        return _word_decode(int(outcome_id), self.m, self.c)


def _gaussian_cdf_symbols(values, c: int) -> np.ndarray:
    mu = values.mean()
    sigma = values.std()
    if sigma == 0.0:
        y = np.full(values.shape, 0.5)
    else:
        y = ndtr((values - mu) / sigma)
    symbols = np.minimum((y * c).astype(np.int64), c - 1)
    return symbols


def _word_encode(symbols, m, tau, c) -> np.ndarray:
    n = symbols.shape[0] - (m - 1) * tau
    ids = np.zeros(n, dtype=np.int64)
    for i in range(m):
        ids += symbols[i * tau : i * tau + n] * c ** (m - 1 - i)
    return ids


def _word_decode(code, m, c) -> tuple:
    word = []
    for i in range(m):
        power = c ** (m - 1 - i)
        word.append(code // power + 1)  # human form: symbols 1..c
        code %= power
    return tuple(word)


@dataclass(frozen=True)
class CosineSimilarityBinning(OutcomeSpace):
    """Binned cosine similarities between successive delay vectors.

    The cosine similarity of each pair of consecutive m-dimensional
    embedding vectors is binned into nbins equal-width bins on [-1, 1]
    (right-most bin closed).
    """

    m: int = 2
    tau: int = 1
    nbins: int = 24

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("embedding dimension m must be >= 2")
        if self.tau < 1:
            raise ValueError("tau must be >= 1")
        if self.nbins < 1:
            raise ValueError("nbins must be >= 1")

    @property
    def _min_length(self):
        return (self.m - 1) * self.tau + 2

    def total_outcomes(self, data=None) -> int:
        return self.nbins

    def encode(self, data) -> np.ndarray:
        x = _prepared_series(data, self._min_length)
        emb = delay_embed(x, self.m, self.tau)
        a, b = emb[:-1], emb[1:]
        dots = np.einsum("ij,ij->i", a, b)
        norms_a = np.linalg.norm(a, axis=1)
        norms_b = np.linalg.norm(b, axis=1)
        # zero-norm windows have no direction; their similarity is pinned to 0
        denom = norms_a * norms_b
        sims = np.divide(dots, denom, out=np.zeros_like(dots), where=denom > 0)
        np.clip(sims, -1.0, 1.0, out=sims)
        ids = np.minimum(
            ((sims + 1.0) / 2.0 * self.nbins).astype(np.int64), self.nbins - 1
        )
        return ids

    def decode(self, outcome_id: int) -> tuple:
        width = 2.0 / self.nbins
        lo = -1.0 + outcome_id * width
        return (lo, lo + width)


@dataclass(frozen=True)
class BubbleSortSwaps(OutcomeSpace):
    """Sorting complexity: the number of swaps bubble sort needs per window.

    The outcome of a window is its inversion count, an integer in
    ``[0, m(m-1)/2]``; equal elements are never swapped.
    """

    m: int = 3
    tau: int = 1

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("window length m must be >= 2")
        if self.tau < 1:
            raise ValueError("tau must be >= 1")

    @property
    def _min_length(self):
        return (self.m - 1) * self.tau + 1

    def total_outcomes(self, data=None) -> int:
        return self.m * (self.m - 1) // 2 + 1

    def encode(self, data) -> np.ndarray:
        x = _prepared_series(data, self._min_length)
        return _kernels.inversion_encode(x, self.m, self.tau)

    def decode(self, outcome_id: int) -> int:
        return int(outcome_id)


@dataclass(frozen=True)
class PowerSpectrum(OutcomeSpace):
    """One-sided FFT frequency bins weighted by spectral power.

    Non-counting: the "histogram" is the periodogram itself, so only
    relative-frequency probabilities are defined (no integer counts).
    """

    counting = False

    def total_outcomes(self, data=None) -> int:
        if data is None:
            raise UncountableOutcomeSpaceError(
                "PowerSpectrum bin count depends on the data length; pass data"
            )
        x = _prepared_series(data, 2)
        return x.shape[0] // 2 + 1

    def encode(self, data) -> np.ndarray:
        raise NonCountingSpaceError(
            "PowerSpectrum is not counting-based; it has no symbol encoding"
        )

    def _counts(self, data) -> Counts:
        raise NonCountingSpaceError(
            "PowerSpectrum has spectral weights, not integer counts"
        )

    def spectral_weights(self, data) -> np.ndarray:
        x = _prepared_series(data, 2)
        return np.abs(np.fft.rfft(x)) ** 2

    def decode(self, outcome_id: int):
        raise UncountableOutcomeSpaceError(
            "PowerSpectrum frequencies are data-dependent; use outcomes(o, data)"
        )

    def observed_outcomes(self, data, ids=None):
        x = _prepared_series(data, 2)
        freqs = np.fft.rfftfreq(x.shape[0])
        if ids is not None:
            freqs = freqs[np.asarray(ids)]
        return list(freqs)


# ---------------------------------------------------------------------------
# Spatial spaces

SQUARE_2X2 = ((0, 0), (0, 1), (1, 0), (1, 1))


def _validated_stencil(stencil):
    offsets = tuple((int(di), int(dj)) for di, dj in stencil)
    if not 2 <= len(offsets) <= 12:
        raise ValueError("stencil must contain 2..12 pixel offsets")
    if len(set(offsets)) != len(offsets):
        raise ValueError("stencil offsets must be distinct")
    min_i = min(o[0] for o in offsets)
    min_j = min(o[1] for o in offsets)
    return tuple((di - min_i, dj - min_j) for di, dj in offsets)


def _stencil_gather(array, stencil):
    """(P, K) matrix of stencil-gathered values, placements in row-major
    order over every position where the whole stencil is inside the array."""
    arr = np.asarray(array, dtype=np.float64)
    if arr.ndim != 2:
        raise ValueError("spatial outcome spaces expect a 2-D array")
    require_finite(arr)
    max_i = max(o[0] for o in stencil)
    max_j = max(o[1] for o in stencil)
    ph = arr.shape[0] - max_i
    pw = arr.shape[1] - max_j
    if ph < 1 or pw < 1:
        raise InputTooShortError(
            (max_i + 1) * (max_j + 1), arr.shape[0] * arr.shape[1], what="array"
        )
    cols = [arr[di : di + ph, dj : dj + pw].ravel() for di, dj in stencil]
    return np.ascontiguousarray(np.column_stack(cols))


@dataclass(frozen=True)
class SpatialOrdinalPatterns(OutcomeSpace):
    """Ordinal patterns of values gathered by a pixel stencil.

    The stencil is any arrangement of K distinct pixel offsets; it is slid
    across the array and the gathered values are ranked exactly like the
    1-D ordinal windows (stable ties, Lehmer ids).
    """

    stencil: tuple = SQUARE_2X2

    def __post_init__(self):
        object.__setattr__(self, "stencil", _validated_stencil(self.stencil))

    @property
    def k(self) -> int:
        return len(self.stencil)

    def total_outcomes(self, data=None) -> int:
        return factorial(self.k)

    def encode(self, data) -> np.ndarray:
        return _kernels.ordinal_encode_rows(_stencil_gather(data, self.stencil))

    def decode(self, outcome_id: int) -> tuple:
        return _rank_vector_to_sort_order(lehmer_decode(int(outcome_id), self.k))


@dataclass(frozen=True)
class SpatialDispersion(OutcomeSpace):
    """Dispersion words of values gathered by a pixel stencil.

    The whole array is symbolized through the Gaussian CDF (using the
    array's mean/std) into c categories; each stencil placement is read as
    a base-c word in stencil order.
    """

    stencil: tuple = SQUARE_2X2
    c: int = 3

    def __post_init__(self):
        object.__setattr__(self, "stencil", _validated_stencil(self.stencil))
        if self.c < 2:
            raise ValueError("category count c must be >= 2")
        if self.c**self.k > _INT64_MAX:
            raise CardinalityOverflowError(
                f"c^K = {self.c}^{self.k} exceeds 2^63 - 1"
            )

    @property
    def k(self) -> int:
        return len(self.stencil)

    def total_outcomes(self, data=None) -> int:
        return self.c**self.k

    def encode(self, data) -> np.ndarray:
        arr = np.asarray(data, dtype=np.float64)
        if arr.ndim != 2:
            raise ValueError("spatial outcome spaces expect a 2-D array")
        require_finite(arr)
        # symbolize the whole array (its own mean/std), then gather words
        symbols = _gaussian_cdf_symbols(arr.ravel(), self.c).reshape(arr.shape)
        gathered = _stencil_gather(symbols.astype(np.float64), self.stencil)
        ids = np.zeros(gathered.shape[0], dtype=np.int64)
        for i in range(self.k):
            ids += gathered[:, i].astype(np.int64) * self.c ** (self.k - 1 - i)
        return ids

    def decode(self, outcome_id: int) -> tuple:
        return _word_decode(int(outcome_id), self.k, self.c)


# ---------------------------------------------------------------------------
# Module-level operations

def total_outcomes(o: OutcomeSpace, data=None) -> int:
    """Cardinality of the outcome space (resolved against data if needed)."""
    return o.total_outcomes(data)


def encode(o: OutcomeSpace, data) -> np.ndarray:
    """One int64 outcome id per window / stencil placement."""
    return o.encode(data)


def spatial_encode(o: OutcomeSpace, array) -> np.ndarray:
    """Encode a 2-D array with a spatial outcome space (alias of encode)."""
    if not isinstance(o, (SpatialOrdinalPatterns, SpatialDispersion)):
        raise ValueError("spatial_encode expects a spatial outcome space")
    return o.encode(array)


def counts(o: OutcomeSpace, data) -> Counts:
    """Occurrence counts of the observed outcomes, sorted by outcome id."""
    return o._counts(data)


def outcomes(o: OutcomeSpace, data) -> list:
    """Decoded labels of the observed outcomes, sorted by outcome id."""
    cnts = o._counts(data)
    if cnts.outcome_ids is not None:
        return o.observed_outcomes(data, ids=cnts.outcome_ids)
    return o.observed_outcomes(data)


def missing_outcomes(o: OutcomeSpace, data) -> int:
    """Number of outcomes possible under the space but absent from the data."""
    if isinstance(o, (UniqueElements, PowerSpectrum)):
        raise UncountableOutcomeSpaceError(
            f"missing_outcomes is undefined for {type(o).__name__}: "
            "it has no a-priori cardinality"
        )
    total = o.total_outcomes(data)
    observed = np.unique(o.encode(data)).size
    return int(total - observed)


def sparse_histogram(points, bin_width: float) -> Counts:
    """Histogram of (possibly high-dimensional) points without a bin grid.

    Points are mapped to integer bin coordinates and aggregated through a
    sparse table of occupied bins, so memory scales with the number of
    occupied bins and never with the total bin count.
    """
    if not bin_width > 0:
        raise ValueError("bin_width must be > 0")
    return ValueBinning(bin_width=bin_width)._counts(points)
