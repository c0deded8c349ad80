"""entrokit: composable entropy and complexity timeseries analysis.

Every discrete measure factors into four orthogonal axes: an outcome space
(how data become symbols), a probability estimator (how counts become a
PMF), an information-measure definition (the PMF functional) and a measure
estimator (how the functional is evaluated from finite data).  The two
entry points `information` and `complexity` compose these axes; any
combination of compatible axis choices works.

The hot encoding kernels run on a compiled Cython extension when built,
with an identical pure-numpy fallback selected automatically at import
(see ``entrokit.backend_name()``).
"""

from . import _kernels
from .complexity import (
    ApproximateEntropy,
    BubbleEntropy,
    ComplexityEstimator,
    LempelZiv76,
    MissingOutcomes,
    ReverseDispersion,
    SampleEntropy,
    StatisticalComplexity,
    complexity,
    disequilibrium,
)
from .core import (
    Counts,
    MeasureResult,
    Outcome,
    Probabilities,
    validate_pmf,
)
from .differential import (
    AlizadehArghami,
    Correa,
    DifferentialEstimator,
    Ebrahimi,
    KozachenkoLeonenko,
    Kraskov,
    Vasicek,
    entropy_differential,
)
from .embedding import EmbeddingSpec, delay_embed
from .errors import (
    CardinalityOverflowError,
    ConfigError,
    DegenerateDistanceWarning,
    DegenerateSpaceError,
    EmptyCountsError,
    EntrokitError,
    IncompatibleEstimatorError,
    IngestError,
    InputTooShortError,
    InvalidPMFError,
    NonCountingSpaceError,
    NonFiniteDataError,
    NotNormalizableError,
    UncountableOutcomeSpaceError,
    UndefinedResultError,
)
from .info_measures import (
    ChaoShen,
    Curado,
    DiscreteEstimator,
    FluctuationComplexity,
    HorvitzThompson,
    InfoMeasure,
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
    estimate_discrete,
    information,
    information_normalized,
    measure_maximum,
    measure_value,
)
from .io import ingest
from .multiscale import MultiscaleSpec, ScaleResult, coarse_grain, multiscale
from .outcome_spaces import (
    BubbleSortSwaps,
    CosineSimilarityBinning,
    Dispersion,
    OrdinalPatterns,
    OutcomeSpace,
    PowerSpectrum,
    SpatialDispersion,
    SpatialOrdinalPatterns,
    UniqueElements,
    ValueBinning,
    counts,
    encode,
    lehmer_decode,
    lehmer_encode,
    missing_outcomes,
    outcomes,
    sparse_histogram,
    spatial_encode,
    total_outcomes,
)
from .prob_estimators import (
    AddConstant,
    BayesianRegularization,
    ProbEstimator,
    RelativeAmount,
    Shrinkage,
    allprobabilities,
    estimate_probabilities,
    probabilities,
)
from .recipes import (
    DifferentialRecipe,
    InformationRecipe,
    apply_measure,
    resolve_measure,
)
from .registry import RegistryReport, registry_count

__version__ = "0.1.0"


def backend_name() -> str:
    """Which kernel backend is active: "cython" or "python"."""
    return _kernels.BACKEND
