import entrokit as ek
from entrokit.registry import DEFAULT_CATALOG, registry_count


def test_minimal_catalog_counts_one():
    catalog = {
        "counting_spaces": [ek.OrdinalPatterns],
        "prob_estimators": [ek.RelativeAmount],
        "definitions": [ek.Shannon],
        "generic_estimators": [ek.PlugIn],
    }
    report = registry_count(catalog)
    assert report.pmf_ways == 1
    assert report.measure_estimates == 1
    assert report.grand_total == 1


def test_adding_a_definition_is_linear():
    base = {
        "counting_spaces": [ek.OrdinalPatterns, ek.Dispersion],
        "prob_estimators": [ek.RelativeAmount, ek.Shrinkage],
        "definitions": [ek.Shannon],
        "generic_estimators": [ek.PlugIn, ek.Jackknife],
    }
    before = registry_count(base).grand_total
    extended = dict(base, definitions=[ek.Shannon, ek.Renyi])
    after = registry_count(extended).grand_total
    # one more definition with 2 generic estimators adds N_O * N_P * 2
    assert after - before == 2 * 2 * 2


def test_full_catalog_matches_independent_hand_count():
    report = registry_count()

    # hand count of the implemented catalog, composed the same way the
    # combinatorial formula composes the axes
    counting_spaces = 8        # unique, binning, ordinal, dispersion,
    #                            cosine, bubble-swaps, spatial-ordinal,
    #                            spatial-dispersion
    non_counting_spaces = 1    # power spectrum (relative frequency only)
    prob_estimators = 4        # relative, add-constant, bayes, shrinkage
    pmf_ways = counting_spaces * prob_estimators + non_counting_spaces  # 33

    definitions = 10
    generic = 2                # plug-in, jackknife
    shannon_specific = 3       # miller-madow, chao-shen, horvitz-thompson
    measure_estimates = definitions * generic + shannon_specific  # 23

    discrete = pmf_ways * measure_estimates            # 759
    differential = 6
    statcomplexity = counting_spaces * definitions     # 80
    complexity = 6 + statcomplexity                    # 86
    probabilities_measures = 2 * pmf_ways              # 66
    grand = discrete + differential + complexity + probabilities_measures

    assert report.pmf_ways == pmf_ways == 33
    assert report.measure_estimates == measure_estimates == 23
    assert report.discrete_total == discrete == 759
    assert report.differential_total == differential
    assert report.complexity_total == complexity == 86
    assert report.probabilities_total == probabilities_measures == 66
    assert report.grand_total == grand == 917


def test_catalog_lists_match_registered_classes():
    assert len(DEFAULT_CATALOG["counting_spaces"]) == 8
    assert len(DEFAULT_CATALOG["non_counting_spaces"]) == 1
    assert len(DEFAULT_CATALOG["definitions"]) == 10
    assert len(DEFAULT_CATALOG["differential_estimators"]) == 6
    assert len(DEFAULT_CATALOG["complexity_estimators"]) == 7
    assert ek.Shannon in DEFAULT_CATALOG["definitions"]


def test_per_definition_breakdown():
    report = registry_count()
    assert report.per_definition["Shannon"] == 5  # 2 generic + 3 specific
    assert report.per_definition["Renyi"] == 2
    assert sum(report.per_definition.values()) == report.measure_estimates
