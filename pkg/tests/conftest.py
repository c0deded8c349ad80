"""Shared fixtures and independent oracle helpers."""

import numpy as np
import pytest

import entrokit as ek


def logistic_orbit(n, x0=0.3, r=4.0, transient=100):
    """Iterates of the logistic map x -> r x (1 - x) after a transient."""
    x = float(x0)
    for _ in range(transient):
        x = r * x * (1.0 - x)
    out = np.empty(n)
    for i in range(n):
        x = r * x * (1.0 - x)
        out[i] = x
    return out


def brute_force_sampen_counts(x, m, r, tau=1):
    """O(N^2) template-matching oracle for sample entropy's A and B.

    Ordered pair counts (i != j) of (m+1)- and m-length templates within
    Chebyshev distance r, both over the same first N - m*tau templates.
    Every pairwise distance is formed explicitly (no space partitioning).
    """
    x = np.asarray(x, dtype=float)
    n_templates = len(x) - m * tau
    counts = {}
    for mm in (m + 1, m):
        templates = np.array(
            [x[i : i + mm * tau : tau] for i in range(n_templates)]
        )
        pairwise = np.max(
            np.abs(templates[:, None, :] - templates[None, :, :]), axis=2
        )
        within = pairwise <= r
        counts[mm] = int(within.sum()) - n_templates  # drop the diagonal
    return counts[m + 1], counts[m]


def lz76_oracle(seq):
    """Independent LZ76 phrase counter via substring search.

    A phrase starting at ``pos`` is the longest chunk whose proper prefix
    can be copied from a start position before ``pos`` (overlap into the
    phrase allowed) plus one innovation symbol; the final phrase may end
    without innovation when the sequence is exhausted.
    """
    symbols = [int(v) for v in seq]
    alphabet = {v: chr(0x30 + i) for i, v in enumerate(sorted(set(symbols)))}
    s = "".join(alphabet[v] for v in symbols)
    n = len(s)
    if n == 0:
        return 0
    phrases = 0
    pos = 0
    while pos < n:
        length = 1
        # grow while s[pos:pos+length] occurs starting before pos
        while pos + length <= n and s.find(s[pos : pos + length], 0, pos + length - 1) != -1:
            length += 1
        phrases += 1
        pos += length
    return phrases


def dense_histogram_oracle(points, bin_width):
    """Brute-force dense-grid histogram with the same range convention
    ([min, max] per axis, right-most bin closed)."""
    points = np.asarray(points, dtype=float)
    if points.ndim == 1:
        points = points[:, None]
    mins = points.min(axis=0)
    maxs = points.max(axis=0)
    nbins = np.maximum(
        np.ceil((maxs - mins) / bin_width - 1e-12).astype(int), 1
    )
    edges = [
        np.linspace(mins[d], mins[d] + nbins[d] * bin_width, nbins[d] + 1)
        for d in range(points.shape[1])
    ]
    hist, _ = np.histogramdd(points, bins=edges)
    return hist.ravel(), nbins


ALL_TIMESERIES_COUNTING_SPACES = [
    ek.UniqueElements(),
    ek.ValueBinning(n_bins=8),
    ek.OrdinalPatterns(m=3, tau=1),
    ek.Dispersion(m=2, c=3, tau=1),
    ek.CosineSimilarityBinning(m=3, tau=1, nbins=10),
    ek.BubbleSortSwaps(m=4, tau=1),
]

ALL_SPATIAL_SPACES = [
    ek.SpatialOrdinalPatterns(),
    ek.SpatialDispersion(c=3),
]

ALL_PROB_ESTIMATORS = [
    ek.RelativeAmount(),
    ek.AddConstant(c=1.0),
    ek.BayesianRegularization(a=0.5),
    ek.Shrinkage(),
]

ALL_DEFINITIONS = [
    ek.Shannon(),
    ek.Renyi(q=2.0),
    ek.Tsallis(q=2.0),
    ek.Kaniadakis(kappa=0.3),
    ek.Curado(b=1.5),
    ek.StretchedExponential(eta=2.0),
    ek.ShannonExtropy(),
    ek.RenyiExtropy(q=2.0),
    ek.TsallisExtropy(q=2.0),
    ek.FluctuationComplexity(),
]


def catalog_recipes():
    """Every registered information recipe plus one of each complexity and
    differential estimator, for exhaustive composition sweeps."""
    recipes = []
    for space in ALL_TIMESERIES_COUNTING_SPACES:
        for probs in ALL_PROB_ESTIMATORS:
            for definition in ALL_DEFINITIONS:
                for estimator in (ek.PlugIn(), ek.Jackknife()):
                    recipes.append(
                        ek.InformationRecipe(
                            measure=definition,
                            space=space,
                            probs=probs,
                            estimator=estimator,
                        )
                    )
    recipes += [
        ek.InformationRecipe(
            measure=ek.Shannon(), space=ek.OrdinalPatterns(m=3), normalized=True
        ),
        ek.SampleEntropy(m=2),
        ek.ApproximateEntropy(m=2),
        ek.ReverseDispersion(m=2, c=3),
        ek.MissingOutcomes(ek.OrdinalPatterns(m=3)),
        ek.StatisticalComplexity(space=ek.OrdinalPatterns(m=3)),
        ek.BubbleEntropy(m=4),
        ek.DifferentialRecipe(estimator=ek.KozachenkoLeonenko()),
    ]
    return recipes


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def quantized_correlated_noise(n=1000, seed=1234, phi=0.6, levels=10):
    """Seeded AR(1) noise rounded to a small alphabet.

    Correlation keeps every pattern distribution away from exact uniformity
    (where bias-corrected estimators legitimately overshoot the maximum)
    and quantization gives UniqueElements a non-trivial alphabet.
    """
    gen = np.random.default_rng(seed)
    x = np.empty(n)
    prev = 0.0
    for i in range(n):
        prev = phi * prev + gen.standard_normal()
        x[i] = prev
    return np.round(x * levels / 4.0) / (levels / 4.0)
