import math

import numpy as np
import pytest

import entrokit as ek
from conftest import brute_force_sampen_counts, logistic_orbit, lz76_oracle


class TestApproximateEntropy:
    def test_constant_series_zero(self):
        r = ek.complexity(ek.ApproximateEntropy(m=2, r=0.2), np.ones(60))
        assert r.value == 0.0

    def test_regular_below_noise(self):
        rng = np.random.default_rng(1)
        t = np.arange(400)
        sine = np.sin(2 * np.pi * t / 25)
        noise = rng.standard_normal(400)
        a = ek.complexity(ek.ApproximateEntropy(m=2), sine).value
        b = ek.complexity(ek.ApproximateEntropy(m=2), noise).value
        assert a < b

    def test_too_short(self):
        with pytest.raises(ek.InputTooShortError):
            ek.complexity(ek.ApproximateEntropy(m=5), np.arange(4.0))


class TestSampleEntropy:
    def test_constant_series_zero(self):
        r = ek.complexity(ek.SampleEntropy(m=2), np.ones(60))
        assert r.value == 0.0

    def test_tree_equals_brute_force(self):
        rng = np.random.default_rng(2)
        for _ in range(10):
            n = int(rng.integers(40, 200))
            x = rng.standard_normal(n)
            est = ek.SampleEntropy(m=2, r=0.2 * float(x.std()))
            assert est.match_counts(x) == brute_force_sampen_counts(x, 2, est.r)

    def test_tree_equals_brute_force_with_tau(self):
        rng = np.random.default_rng(3)
        x = rng.standard_normal(150)
        est = ek.SampleEntropy(m=2, r=0.25, tau=2)
        assert est.match_counts(x) == brute_force_sampen_counts(x, 2, 0.25, tau=2)

    def test_no_matches_is_typed_error(self):
        x = np.array([0.0, 100.0, -100.0, 50.0, -50.0, 200.0, -200.0])
        with pytest.raises(ek.UndefinedResultError):
            ek.complexity(ek.SampleEntropy(m=2, r=1e-6), x)

    def test_white_noise_above_sine(self):
        wins = 0
        t = np.arange(2000)
        sine = np.sin(2 * np.pi * t / 50)
        for seed in range(20):
            rng = np.random.default_rng(3000 + seed)
            noise = rng.standard_normal(2000)
            s_noise = ek.complexity(ek.SampleEntropy(m=2), noise).value
            s_sine = ek.complexity(ek.SampleEntropy(m=2), sine).value
            wins += s_noise > s_sine
        assert wins >= 19

    def test_tolerance_resolution_recorded(self):
        rng = np.random.default_rng(4)
        x = rng.standard_normal(100)
        r = ek.complexity(ek.SampleEntropy(m=2), x)
        assert f"r={0.2 * float(x.std())}" in r.recipe


class TestLempelZiv76:
    def test_alternating_example(self):
        # hand parse of 0101010101: 0 | 1 | 01010101 -> 3 phrases
        seq = np.array([0, 1, 0, 1, 0, 1, 0, 1, 0, 1])
        assert lz76_oracle(seq) == 3
        assert ek.complexity(ek.LempelZiv76(), seq).value == 3.0

    def test_matches_oracle_on_random_sequences(self):
        rng = np.random.default_rng(5)
        for _ in range(30):
            seq = rng.integers(0, 3, int(rng.integers(1, 150)))
            assert ek.complexity(ek.LempelZiv76(), seq).value == lz76_oracle(seq)

    def test_real_valued_input_rejected(self):
        with pytest.raises(ek.IncompatibleEstimatorError):
            ek.complexity(ek.LempelZiv76(), np.array([0.5, 1.5]))

    def test_composes_with_outcome_space_encoding(self):
        rng = np.random.default_rng(6)
        x = rng.standard_normal(500)
        symbols = ek.encode(ek.Dispersion(m=1, c=2), x)
        value = ek.complexity(ek.LempelZiv76(), symbols).value
        assert 0 < value < 500


class TestReverseDispersion:
    def test_matches_full_support_formula(self):
        rng = np.random.default_rng(7)
        x = rng.standard_normal(300)
        est = ek.ReverseDispersion(m=2, c=3)
        cnts = ek.counts(ek.Dispersion(m=2, c=3), x)
        dense = np.zeros(cnts.total_outcomes)
        dense[cnts.outcome_ids] = cnts.values / cnts.n
        expected = float(np.sum((dense - 1 / cnts.total_outcomes) ** 2))
        assert ek.complexity(est, x).value == pytest.approx(expected, rel=1e-12)

    def test_uniformity_bounds(self):
        # constant data: one pattern observed -> maximal non-uniformity
        value = ek.complexity(ek.ReverseDispersion(m=2, c=2), np.ones(50)).value
        assert value == pytest.approx(1 - 1 / 4, rel=1e-12)


class TestMissingOutcomes:
    def test_logistic_fraction(self):
        est = ek.MissingOutcomes(ek.OrdinalPatterns(m=3))
        assert ek.complexity(est, logistic_orbit(10_000)).value == pytest.approx(1 / 6)

    def test_in_unit_interval(self):
        rng = np.random.default_rng(8)
        x = rng.standard_normal(50)
        for space in (ek.OrdinalPatterns(m=4), ek.Dispersion(m=3, c=3)):
            v = ek.complexity(ek.MissingOutcomes(space), x).value
            assert 0.0 <= v <= 1.0

    def test_non_increasing_on_nested_prefixes(self):
        rng = np.random.default_rng(9)
        x = rng.standard_normal(400)
        est = ek.MissingOutcomes(ek.OrdinalPatterns(m=4))
        values = [
            ek.complexity(est, x[:n]).value for n in (50, 100, 200, 400)
        ]
        assert all(a >= b for a, b in zip(values, values[1:]))

    def test_generalizes_over_spaces(self):
        # the same statistic runs for any finite outcome space
        rng = np.random.default_rng(10)
        x = rng.standard_normal(200)
        for space in (
            ek.OrdinalPatterns(m=3),
            ek.Dispersion(m=2, c=4),
            ek.BubbleSortSwaps(m=6),
            ek.CosineSimilarityBinning(m=2, nbins=16),
        ):
            v = ek.complexity(ek.MissingOutcomes(space), x).value
            assert 0.0 <= v <= 1.0


class TestStatisticalComplexity:
    @pytest.mark.parametrize("distance", ["jensen-shannon", "euclidean"])
    def test_uniform_pmf_zero(self, distance):
        data = np.array([0.0, 1.0, 2.0, 3.0] * 25)
        est = ek.StatisticalComplexity(space=ek.UniqueElements(), distance=distance)
        assert abs(ek.complexity(est, data).value) <= 1e-12

    @pytest.mark.parametrize("distance", ["jensen-shannon", "euclidean"])
    def test_single_outcome_zero(self, distance):
        est = ek.StatisticalComplexity(space=ek.OrdinalPatterns(m=3), distance=distance)
        assert abs(ek.complexity(est, np.arange(60.0)).value) <= 1e-12

    def test_js_complexity_in_unit_interval(self):
        rng = np.random.default_rng(11)
        for _ in range(200):
            n = int(rng.integers(2, 30))
            w = rng.uniform(0, 1, n) ** 3
            pmf = w / w.sum()
            q = ek.disequilibrium(pmf, ek.Shannon(), "jensen-shannon")
            assert -1e-12 <= q <= 1.0 + 1e-12
            h_norm = ek.measure_value(ek.Shannon(), pmf) / ek.measure_maximum(
                ek.Shannon(), n
            )
            assert -1e-12 <= q * h_norm <= 1.0 + 1e-12

    def test_chaotic_map_strictly_inside(self):
        est = ek.StatisticalComplexity(space=ek.OrdinalPatterns(m=4))
        c = ek.complexity(est, logistic_orbit(5000)).value
        assert 0.05 < c < 0.95

    def test_generalized_definition(self):
        est = ek.StatisticalComplexity(
            space=ek.OrdinalPatterns(m=3), measure=ek.Tsallis(q=2.0)
        )
        c = ek.complexity(est, logistic_orbit(2000)).value
        assert np.isfinite(c)

    def test_unknown_distance_rejected(self):
        with pytest.raises(ValueError):
            ek.StatisticalComplexity(distance="manhattan")

    def test_spatial_spaces_and_custom_stencils(self):
        # image analysis: complexity-entropy pair from pixel stencils,
        # square or not
        rng = np.random.default_rng(14)
        img = rng.standard_normal((24, 24))
        for space in (
            ek.SpatialOrdinalPatterns(),
            ek.SpatialDispersion(stencil=((0, 0), (0, 1), (1, 0), (2, 1)), c=3),
        ):
            c = ek.complexity(ek.StatisticalComplexity(space=space), img).value
            assert 0.0 <= c <= 1.0


class TestBubbleEntropy:
    def test_finite_and_deterministic(self):
        rng = np.random.default_rng(12)
        x = rng.standard_normal(300)
        est = ek.BubbleEntropy(m=8)
        a = ek.complexity(est, x).value
        b = ek.complexity(est, x).value
        assert np.isfinite(a) and a == b

    def test_scaling_constant(self):
        # independently rebuild (H2_{m+1} - H2_m) / ln((m+1)/(m-1))
        rng = np.random.default_rng(13)
        x = rng.standard_normal(200)
        m = 4
        h2 = []
        for mm in (m, m + 1):
            cnts = ek.counts(ek.BubbleSortSwaps(m=mm), x)
            p = cnts.values / cnts.n
            h2.append(-math.log(float(np.sum(p**2))))
        expected = (h2[1] - h2[0]) / math.log((m + 1) / (m - 1))
        assert ek.complexity(ek.BubbleEntropy(m=m), x).value == pytest.approx(
            expected, rel=1e-12
        )

    def test_minimum_window(self):
        with pytest.raises(ValueError):
            ek.BubbleEntropy(m=1)
