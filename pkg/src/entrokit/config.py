"""Recipe configuration: TOML files and compact spec strings.

Both front-ends produce the same nested mapping form and are built by the
same constructors.  The compact grammar is ``name(key=value, ...)`` with
values that may themselves be ``name(...)`` specs, e.g.::

    ordinal(m=3,tau=1)
    information(measure=renyi(q=2),space=dispersion(m=2,c=3),normalized=true)
    complexity(estimator=sampen(m=2))

A recipe selects exactly one family: ``information`` (discrete pipeline),
``differential`` or ``complexity``.
"""

from __future__ import annotations

from dataclasses import dataclass

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
from .errors import ConfigError
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
from .recipes import DifferentialRecipe, InformationRecipe

_SPACES = {
    "unique": UniqueElements,
    "binning": ValueBinning,
    "valuebinning": ValueBinning,
    "ordinal": OrdinalPatterns,
    "dispersion": Dispersion,
    "cosine": CosineSimilarityBinning,
    "bubbleswaps": BubbleSortSwaps,
    "powerspectrum": PowerSpectrum,
    "spatial-ordinal": SpatialOrdinalPatterns,
    "spatial-dispersion": SpatialDispersion,
}

_PROBS = {
    "relative": RelativeAmount,
    "addconstant": AddConstant,
    "bayes": BayesianRegularization,
    "shrinkage": Shrinkage,
}

_MEASURES = {
    "shannon": Shannon,
    "renyi": Renyi,
    "tsallis": Tsallis,
    "kaniadakis": Kaniadakis,
    "curado": Curado,
    "stretched": StretchedExponential,
    "shannon-extropy": ShannonExtropy,
    "renyi-extropy": RenyiExtropy,
    "tsallis-extropy": TsallisExtropy,
    "fluctuation": FluctuationComplexity,
}

_DISCRETE_ESTIMATORS = {
    "plugin": PlugIn,
    "jackknife": Jackknife,
    "millermadow": MillerMadow,
    "chaoshen": ChaoShen,
    "horvitzthompson": HorvitzThompson,
}

_DIFFERENTIAL_ESTIMATORS = {
    "kl": KozachenkoLeonenko,
    "kozachenkoleonenko": KozachenkoLeonenko,
    "kraskov": Kraskov,
    "vasicek": Vasicek,
    "ebrahimi": Ebrahimi,
    "correa": Correa,
    "alizadeharghami": AlizadehArghami,
}

_COMPLEXITY_ESTIMATORS = {
    "apen": ApproximateEntropy,
    "sampen": SampleEntropy,
    "lz76": LempelZiv76,
    "reverse-dispersion": ReverseDispersion,
    "missing-outcomes": MissingOutcomes,
    "statcomplexity": StatisticalComplexity,
    "bubble-entropy": BubbleEntropy,
}


# ---------------------------------------------------------------------------
# Compact spec-string grammar

def parse_spec_string(text: str):
    """Parse ``name(key=value, ...)`` into ``{"name": ..., key: value}``.

    Values may be numbers, booleans, bare words or nested specs.
    """
    spec, rest = _parse_value(text.strip())
    if rest.strip():
        raise ConfigError(f"trailing characters in spec: {rest!r}")
    if not isinstance(spec, dict):
        raise ConfigError(f"expected name(...) spec, got {text!r}")
    return spec


def _parse_value(text: str):
    text = text.lstrip()
    # find the end of the token: a bare word possibly followed by (...)
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            if depth == 0:
                return _atom(text[:i]), text[i:]
            depth -= 1
            if depth == 0:
                return _spec_dict(text[: i + 1]), text[i + 1 :]
        elif ch == "," and depth == 0:
            return _atom(text[:i]), text[i:]
    if depth != 0:
        raise ConfigError(f"unbalanced parentheses in {text!r}")
    return _atom(text), ""


def _spec_dict(text: str):
    open_idx = text.index("(")
    name = text[:open_idx].strip()
    if not name:
        raise ConfigError(f"missing name in spec {text!r}")
    body = text[open_idx + 1 : -1]
    out = {"name": name.lower()}
    while body.strip():
        body = body.lstrip(", ")
        if not body:
            break
        eq = body.index("=")
        key = body[:eq].strip()
        value, body = _parse_value(body[eq + 1 :])
        out[key] = value
    return out


def _atom(token: str):
    token = token.strip()
    if not token:
        raise ConfigError("empty value in spec string")
    low = token.lower()
    if low in ("true", "false"):
        return low == "true"
    if low in ("none", "null"):
        return None
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        pass
    return low


# ---------------------------------------------------------------------------
# Constructors

def _as_spec(value, what):
    """Normalize str | dict input to a {"name": ..., params...} mapping."""
    if isinstance(value, str):
        if "(" in value:
            return parse_spec_string(value)
        return {"name": value.strip().lower()}
    if isinstance(value, dict):
        spec = dict(value)
        name = spec.get("name")
        if not isinstance(name, str):
            raise ConfigError(f"{what} spec needs a 'name' key: {value!r}")
        spec["name"] = name.strip().lower()
        return spec
    raise ConfigError(f"cannot interpret {what} spec: {value!r}")


def _construct(table, value, what):
    spec = _as_spec(value, what)
    name = spec.pop("name")
    try:
        cls = table[name]
    except KeyError:
        raise ConfigError(
            f"unknown {what} {name!r}; expected one of {sorted(table)}"
        ) from None
    try:
        return cls(**spec)
    except (TypeError, ValueError) as err:
        raise ConfigError(f"invalid parameters for {what} {name!r}: {err}") from err


def build_space(value):
    spec = _as_spec(value, "outcome space")
    if "stencil" in spec:
        spec["stencil"] = _parse_stencil(spec["stencil"])
    return _construct(_SPACES, spec, "outcome space")


def _parse_stencil(value):
    if isinstance(value, str):
        if "x" in value:  # "2x2" style rectangle shorthand
            rows, cols = value.lower().split("x")
            return tuple(
                (i, j) for i in range(int(rows)) for j in range(int(cols))
            )
        raise ConfigError(f"cannot parse stencil {value!r}")
    try:
        return tuple((int(di), int(dj)) for di, dj in value)
    except (TypeError, ValueError) as err:
        raise ConfigError(f"cannot parse stencil {value!r}: {err}") from err


def build_probs(value):
    return _construct(_PROBS, value, "probability estimator")


def build_measure(value):
    spec = _as_spec(value, "measure definition")
    if spec.get("name") == "fluctuation" and "inner" in spec:
        spec["inner"] = build_measure(spec["inner"])
    return _construct(_MEASURES, spec, "measure definition")


def build_discrete_estimator(value):
    return _construct(_DISCRETE_ESTIMATORS, value, "discrete estimator")


def build_differential_estimator(value):
    return _construct(_DIFFERENTIAL_ESTIMATORS, value, "differential estimator")


def build_complexity_estimator(value):
    spec = _as_spec(value, "complexity estimator")
    name = spec.get("name")
    if name in ("missing-outcomes", "statcomplexity") and "space" in spec:
        spec["space"] = build_space(spec["space"])
    if name == "statcomplexity":
        if "probs" in spec:
            spec["probs"] = build_probs(spec["probs"])
        if "measure" in spec:
            spec["measure"] = build_measure(spec["measure"])
        if "estimator" in spec:
            spec["estimator"] = build_discrete_estimator(spec["estimator"])
    return _construct(_COMPLEXITY_ESTIMATORS, spec, "complexity estimator")


# ---------------------------------------------------------------------------
# Recipe configuration entries

@dataclass(frozen=True)
class RecipeEntry:
    """One configured measure: a recipe object plus CLI metadata."""

    name: str
    family: str
    recipe: object  # InformationRecipe | DifferentialRecipe | ComplexityEstimator
    max_scale: int | None = None  # per-recipe multiscale block
    pre_encode_space: object = None  # symbolize input first (LZ76 composition)


_FAMILIES = ("information", "differential", "complexity")


def build_recipe_entry(spec, default_name=None) -> RecipeEntry:
    """Build one recipe from a TOML table or compact spec string."""
    spec = _as_spec(spec, "recipe") if not isinstance(spec, dict) else dict(spec)
    family = spec.pop("family", None)
    if family is None and spec.get("name") in _FAMILIES:
        family = spec.pop("name")
    if family not in _FAMILIES:
        raise ConfigError(
            f"recipe must declare exactly one family of {_FAMILIES}, got {family!r}"
        )
    name = spec.pop("name", None) or default_name or family
    max_scale = None
    if "multiscale" in spec:
        block = spec.pop("multiscale")
        if isinstance(block, dict):
            if "max_scale" not in block:
                raise ConfigError("multiscale block needs a max_scale key")
            max_scale = int(block["max_scale"])
        else:
            max_scale = int(block)
        if max_scale < 1:
            raise ConfigError("max_scale must be >= 1")

    pre_space = None
    if family == "information":
        if "measure" not in spec or "space" not in spec:
            raise ConfigError("information recipes need 'measure' and 'space'")
        recipe = InformationRecipe(
            measure=build_measure(spec.pop("measure")),
            space=build_space(spec.pop("space")),
            probs=build_probs(spec.pop("probs", "relative")),
            estimator=build_discrete_estimator(spec.pop("estimator", "plugin")),
            normalized=bool(spec.pop("normalized", False)),
        )
    elif family == "differential":
        if "estimator" not in spec:
            raise ConfigError("differential recipes need an 'estimator'")
        base = spec.pop("base", None)
        recipe = DifferentialRecipe(
            estimator=build_differential_estimator(spec.pop("estimator")),
            base=float(base) if base is not None else None,
        )
    else:
        if "estimator" not in spec:
            raise ConfigError("complexity recipes need an 'estimator'")
        recipe = build_complexity_estimator(spec.pop("estimator"))
        if "space" in spec:
            # symbolize the input before a symbol-sequence estimator
            if not isinstance(recipe, LempelZiv76):
                raise ConfigError(
                    "a pre-encoding 'space' is only supported for lz76 recipes"
                )
            pre_space = build_space(spec.pop("space"))
    if spec:
        raise ConfigError(f"unknown recipe keys: {sorted(spec)}")
    return RecipeEntry(
        name=str(name),
        family=family,
        recipe=recipe,
        max_scale=max_scale,
        pre_encode_space=pre_space,
    )


def load_config(path) -> tuple[dict, list[RecipeEntry]]:
    """Read a TOML recipe file: (input defaults, recipe entries).

    All recipes are validated before any computation runs.
    """
    try:
        import tomllib
    except ImportError:  # Python 3.10
        import tomli as tomllib
    try:
        with open(path, "rb") as fh:
            doc = tomllib.load(fh)
    except OSError as err:
        raise ConfigError(f"cannot open config {path}: {err}") from err
    except tomllib.TOMLDecodeError as err:
        raise ConfigError(f"invalid TOML in {path}: {err}") from err

    input_defaults = doc.get("input", {})
    raw_recipes = doc.get("recipe", [])
    if not isinstance(raw_recipes, list) or not raw_recipes:
        raise ConfigError("config needs at least one [[recipe]] table")
    entries = []
    for i, spec in enumerate(raw_recipes):
        entries.append(build_recipe_entry(spec, default_name=f"recipe-{i + 1}"))
    return input_defaults, entries
