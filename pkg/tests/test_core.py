import numpy as np
import pytest

import entrokit as ek


class TestValidatePMF:
    def test_symmetric_valid(self):
        assert ek.validate_pmf([0.5, 0.5]) is True

    def test_sum_above_one(self):
        assert ek.validate_pmf([0.5, 0.6]) is False

    def test_delta(self):
        assert ek.validate_pmf([1.0]) is True

    def test_negative_entry(self):
        assert ek.validate_pmf([1.2, -0.2]) is False

    def test_non_finite(self):
        assert ek.validate_pmf([np.nan, 1.0]) is False

    def test_empty(self):
        assert ek.validate_pmf([]) is False

    def test_tolerance_is_tight(self):
        assert ek.validate_pmf([0.5, 0.5 + 5e-13])
        assert not ek.validate_pmf([0.5, 0.5 + 5e-12])


class TestCounts:
    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            ek.Counts(np.array([1, -1]), 2)

    def test_rejects_zero_cardinality(self):
        with pytest.raises(ValueError):
            ek.Counts(np.array([1]), 0)

    def test_rejects_misaligned_ids(self):
        with pytest.raises(ValueError):
            ek.Counts(np.array([1, 2]), 4, outcome_ids=np.array([0]))

    def test_values_frozen(self):
        c = ek.Counts(np.array([1, 2]), 4)
        with pytest.raises(ValueError):
            c.values[0] = 9


class TestMeasureResult:
    def test_normalized_range_invariant(self):
        ek.MeasureResult(1.0, "r", 10, normalized=True)
        ek.MeasureResult(0.0, "r", 10, normalized=True)
        with pytest.raises(ValueError):
            ek.MeasureResult(1.5, "r", 10, normalized=True)

    def test_unnormalized_unbounded(self):
        ek.MeasureResult(42.0, "r", 10, normalized=False)


class TestOutcome:
    def test_pairs_id_with_label(self):
        o = ek.Outcome(3, (1, 0, 2))
        assert o.id == 3 and o.label == (1, 0, 2)

    def test_rejects_negative_id(self):
        with pytest.raises(ValueError):
            ek.Outcome(-1, "x")

    def test_id_label_bijection_for_ordinal_space(self):
        space = ek.OrdinalPatterns(m=4)
        labels = [space.decode(i) for i in range(ek.total_outcomes(space))]
        assert len(set(labels)) == 24  # ids decode to 24 distinct patterns
        for i, label in enumerate(labels):
            outcome = ek.Outcome(i, label)
            assert outcome.id < ek.total_outcomes(space)


def test_counts_to_probabilities_preserves_alignment():
    cnts = ek.Counts(np.array([3, 1, 2]), 10, outcome_ids=np.array([0, 4, 7]))
    p = ek.estimate_probabilities(ek.RelativeAmount(), cnts)
    assert np.array_equal(p.outcome_ids, cnts.outcome_ids)
    assert ek.validate_pmf(p)
