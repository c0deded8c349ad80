"""Pure-numpy reference implementation of the hot kernels.

Selected automatically when the compiled extension is unavailable (or when
``ENTROKIT_BACKEND=python``).  Must stay bit-identical to ``_fast.pyx``:
the outputs are integer symbol ids, so "bit-identical" is exact equality.

Encoding convention for ordinal ids: the id of a window is the Lehmer rank
of the window's *rank vector* ``r`` (``r[i]`` = stable rank of ``x[i]``
inside the window, earlier index ranks lower on ties).  The Lehmer digit of
position ``i`` is then simply ``#{j > i : x[j] < x[i]}``, which is what both
backends compute; no per-window argsort is ever needed.

The window loops run in cache-sized chunks with preallocated scratch so
that large inputs scale linearly instead of thrashing full-length
temporaries through memory.
"""

import numpy as np

from math import factorial

BACKEND = "python"

_CHUNK = 1 << 16


def _pairwise_encode(x, m, tau, weights):
    """Sum over i<j of weights[i] * cmp(x[.+j*tau], x[.+i*tau]) per window.

    ``weights[i]`` = factorial weight for ordinal ids (with the comparison
    "later < earlier"), or 1 for inversion counts ("earlier > later"); both
    reduce to the same strict comparison of the j-slice against the i-slice.
    """
    n = x.shape[0] - (m - 1) * tau
    ids = np.empty(n, dtype=np.int64)
    width = min(n, _CHUNK)
    digit = np.empty(width, dtype=np.int64)
    hit = np.empty(width, dtype=bool)
    for start in range(0, n, _CHUNK):
        stop = min(start + _CHUNK, n)
        w = stop - start
        out = ids[start:stop]
        out[:] = 0
        for i in range(m - 1):
            xi = x[start + i * tau : start + i * tau + w]
            d = digit[:w]
            d[:] = 0
            for j in range(i + 1, m):
                np.less(x[start + j * tau : start + j * tau + w], xi, out=hit[:w])
                d += hit[:w]
            if weights[i] != 1:
                np.multiply(d, weights[i], out=d)
            out += d
    return ids


def ordinal_encode(x, m, tau):
    """Ordinal-pattern ids of all sliding windows of ``x``.

    ``x`` is 1-D float64; windows are ``(x[k], x[k+tau], ..., x[k+(m-1)tau])``
    at stride 1.  Returns int64 ids in ``[0, m!)``.
    """
    weights = [factorial(m - 1 - i) for i in range(m - 1)]
    return _pairwise_encode(x, m, tau, weights)


def ordinal_encode_rows(rows):
    """Ordinal-pattern id per row of a (N, m) float64 array."""
    n, m = rows.shape
    ids = np.zeros(n, dtype=np.int64)
    digit = np.empty(n, dtype=np.int64)
    for i in range(m - 1):
        xi = rows[:, i]
        digit[:] = 0
        for j in range(i + 1, m):
            digit += rows[:, j] < xi
        ids += factorial(m - 1 - i) * digit
    return ids


def inversion_encode(x, m, tau):
    """Bubble-sort swap count (inversions) of each sliding window of ``x``.

    Equal elements are never swapped, so ties contribute nothing.
    Returns int64 counts in ``[0, m(m-1)/2]``.
    """
    n = x.shape[0] - (m - 1) * tau
    ids = np.empty(n, dtype=np.int64)
    width = min(n, _CHUNK)
    hit = np.empty(width, dtype=bool)
    for start in range(0, n, _CHUNK):
        stop = min(start + _CHUNK, n)
        w = stop - start
        out = ids[start:stop]
        out[:] = 0
        for i in range(m - 1):
            xi = x[start + i * tau : start + i * tau + w]
            for j in range(i + 1, m):
                np.greater(xi, x[start + j * tau : start + j * tau + w], out=hit[:w])
                out += hit[:w]
    return ids


def inversion_encode_rows(rows):
    """Inversion count per row of a (N, m) float64 array."""
    n, m = rows.shape
    ids = np.zeros(n, dtype=np.int64)
    for i in range(m - 1):
        xi = rows[:, i]
        for j in range(i + 1, m):
            ids += xi > rows[:, j]
    return ids


def lz76_phrase_count(s):
    """Number of phrases in the LZ76 exhaustive parsing of an int sequence.

    Kaspar-Schuster scan: grow the current phrase while it can be copied
    from some earlier position (self-overlap allowed); each failure to
    extend from every start position closes a phrase.
    """
    n = len(s)
    if n == 0:
        return 0
    if n == 1:
        return 1
    c = 1
    i = 0
    l = 1
    k = 1
    k_max = 1
    while True:
        if l + k > n:
            c += 1
            break
        if s[i + k - 1] == s[l + k - 1]:
            k += 1
            continue
        if k > k_max:
            k_max = k
        i += 1
        if i == l:
            c += 1
            l += k_max
            if l + 1 > n:
                break
            i = 0
            k = 1
            k_max = 1
        else:
            k = 1
    return c
