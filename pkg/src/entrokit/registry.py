"""Catalog of implemented measures and the combinatorial measure count.

The count composes the per-axis catalog sizes: PMF estimation ways are
(counting spaces x probability estimators + non-counting spaces), each
definition contributes one estimate per compatible measure estimator, and
the total multiplies the two; differential estimators, complexity
estimators (statistical complexity expanded over space x definition) and
the two probabilities accessors are added on top.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexity import (
    ApproximateEntropy,
    BubbleEntropy,
    LempelZiv76,
    MissingOutcomes,
    ReverseDispersion,
    SampleEntropy,
    StatisticalComplexity,
)
from .differential import (
    AlizadehArghami,
    Correa,
    Ebrahimi,
    KozachenkoLeonenko,
    Kraskov,
    Vasicek,
)
from .info_measures import (
    ChaoShen,
    Curado,
    FluctuationComplexity,
    HorvitzThompson,
    Jackknife,
    Kaniadakis,
    MillerMadow,
    PlugIn,
    Renyi,
    RenyiExtropy,
    Shannon,
    ShannonExtropy,
    StretchedExponential,
    Tsallis,
    TsallisExtropy,
)
from .outcome_spaces import (
    BubbleSortSwaps,
    CosineSimilarityBinning,
    Dispersion,
    OrdinalPatterns,
    PowerSpectrum,
    SpatialDispersion,
    SpatialOrdinalPatterns,
    UniqueElements,
    ValueBinning,
)
from .prob_estimators import (
    AddConstant,
    BayesianRegularization,
    RelativeAmount,
    Shrinkage,
)

DEFAULT_CATALOG = {
    "counting_spaces": [
        UniqueElements,
        ValueBinning,
        OrdinalPatterns,
        Dispersion,
        CosineSimilarityBinning,
        BubbleSortSwaps,
        SpatialOrdinalPatterns,
        SpatialDispersion,
    ],
    "non_counting_spaces": [PowerSpectrum],
    "prob_estimators": [RelativeAmount, AddConstant, BayesianRegularization, Shrinkage],
    "definitions": [
        Shannon,
        Renyi,
        Tsallis,
        Kaniadakis,
        Curado,
        StretchedExponential,
        ShannonExtropy,
        RenyiExtropy,
        TsallisExtropy,
        FluctuationComplexity,
    ],
    "generic_estimators": [PlugIn, Jackknife],
    "shannon_only_estimators": [MillerMadow, ChaoShen, HorvitzThompson],
    "differential_estimators": [
        KozachenkoLeonenko,
        Kraskov,
        Vasicek,
        Ebrahimi,
        Correa,
        AlizadehArghami,
    ],
    "complexity_estimators": [
        ApproximateEntropy,
        SampleEntropy,
        LempelZiv76,
        ReverseDispersion,
        MissingOutcomes,
        StatisticalComplexity,
        BubbleEntropy,
    ],
    # statistical complexity composes with any counting space x definition
    "statcomplexity_expanded": [StatisticalComplexity],
    "probabilities_functions": 2,  # probabilities, allprobabilities
}


@dataclass(frozen=True)
class RegistryReport:
    """Per-axis catalog sizes and the resulting measure counts."""

    n_counting_spaces: int
    n_non_counting_spaces: int
    n_prob_estimators: int
    pmf_ways: int
    n_definitions: int
    n_generic_estimators: int
    n_shannon_only_estimators: int
    measure_estimates: int
    discrete_total: int
    differential_total: int
    complexity_total: int
    probabilities_total: int
    grand_total: int
    per_definition: dict = field(default_factory=dict)


def registry_count(catalog=None) -> RegistryReport:
    """Count every computable measure combination in the catalog."""
    cat = DEFAULT_CATALOG if catalog is None else catalog
    n_counting = len(cat.get("counting_spaces", []))
    n_non_counting = len(cat.get("non_counting_spaces", []))
    n_pest = len(cat.get("prob_estimators", []))
    # counting spaces support every probability estimator; non-counting
    # spaces admit relative frequency only
    pmf_ways = n_counting * n_pest + n_non_counting * min(n_pest, 1)

    definitions = cat.get("definitions", [])
    n_generic = len(cat.get("generic_estimators", []))
    shannon_only = cat.get("shannon_only_estimators", [])
    per_definition = {}
    for definition in definitions:
        name = getattr(definition, "__name__", str(definition))
        extra = len(shannon_only) if definition is Shannon else 0
        per_definition[name] = n_generic + extra
    measure_estimates = sum(per_definition.values())

    discrete_total = pmf_ways * measure_estimates
    differential_total = len(cat.get("differential_estimators", []))

    plain_complexity = [
        c
        for c in cat.get("complexity_estimators", [])
        if c not in cat.get("statcomplexity_expanded", [])
    ]
    statcomplexity_variants = len(cat.get("statcomplexity_expanded", [])) * (
        n_counting * len(definitions)
    )
    complexity_total = len(plain_complexity) + statcomplexity_variants

    probabilities_total = cat.get("probabilities_functions", 0) * pmf_ways

    return RegistryReport(
        n_counting_spaces=n_counting,
        n_non_counting_spaces=n_non_counting,
        n_prob_estimators=n_pest,
        pmf_ways=pmf_ways,
        n_definitions=len(definitions),
        n_generic_estimators=n_generic,
        n_shannon_only_estimators=len(shannon_only),
        measure_estimates=measure_estimates,
        discrete_total=discrete_total,
        differential_total=differential_total,
        complexity_total=complexity_total,
        probabilities_total=probabilities_total,
        grand_total=discrete_total
        + differential_total
        + complexity_total
        + probabilities_total,
        per_definition=per_definition,
    )
