"""Backend parity: the compiled kernels must be bit-identical to the
pure-numpy fallback."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from entrokit._kernels import _ref, available_backends
from conftest import lz76_oracle

_fast = pytest.importorskip(
    "entrokit._kernels._fast", reason="compiled kernels not built"
)


def test_both_backends_available():
    assert available_backends() == ["cython", "python"]


@settings(max_examples=40, deadline=None)
@given(
    seed=st.integers(0, 2**31),
    m=st.integers(2, 9),
    tau=st.integers(1, 4),
    ties=st.booleans(),
)
def test_ordinal_and_inversion_parity(seed, m, tau, ties):
    rng = np.random.default_rng(seed)
    n = (m - 1) * tau + 1 + int(rng.integers(0, 300))
    if ties:
        x = rng.integers(0, 4, n).astype(np.float64)
    else:
        x = rng.standard_normal(n)
    assert np.array_equal(
        _ref.ordinal_encode(x, m, tau), _fast.ordinal_encode(x, m, tau)
    )
    assert np.array_equal(
        _ref.inversion_encode(x, m, tau), _fast.inversion_encode(x, m, tau)
    )


def test_rows_parity():
    rng = np.random.default_rng(3)
    rows = np.ascontiguousarray(rng.standard_normal((500, 5)))
    assert np.array_equal(
        _ref.ordinal_encode_rows(rows), _fast.ordinal_encode_rows(rows)
    )
    assert np.array_equal(
        _ref.inversion_encode_rows(rows), _fast.inversion_encode_rows(rows)
    )


def test_chunk_boundary_parity():
    # force sizes straddling the pure backend's chunk width
    rng = np.random.default_rng(11)
    for n in (2**16 - 1, 2**16, 2**16 + 7):
        x = rng.standard_normal(n)
        assert np.array_equal(
            _ref.ordinal_encode(x, 4, 2), _fast.ordinal_encode(x, 4, 2)
        )


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 2**31), alphabet=st.integers(2, 5))
def test_lz76_parity_and_oracle(seed, alphabet):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 200))
    seq = rng.integers(0, alphabet, n).astype(np.int64)
    expected = lz76_oracle(seq)
    assert _ref.lz76_phrase_count(seq) == expected
    assert _fast.lz76_phrase_count(np.ascontiguousarray(seq)) == expected


def test_lz76_edge_cases():
    for seq in ([], [7], [1, 1], [0, 1]):
        arr = np.asarray(seq, dtype=np.int64)
        assert _ref.lz76_phrase_count(arr) == lz76_oracle(arr)
        assert _fast.lz76_phrase_count(np.ascontiguousarray(arr)) == lz76_oracle(arr)
