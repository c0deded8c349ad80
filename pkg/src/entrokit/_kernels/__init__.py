"""Hot-kernel backend selection.

The compiled Cython extension is preferred when present; a pure-numpy
fallback with identical outputs is used otherwise.  ``ENTROKIT_BACKEND``
overrides the choice:

* ``auto`` (default) - compiled if importable, else pure Python,
* ``cython``         - compiled, raise if unavailable,
* ``python``         - force the pure-numpy fallback.
"""

import os

from . import _ref

_CHOICE = os.environ.get("ENTROKIT_BACKEND", "auto").strip().lower()

if _CHOICE in ("auto", "", "c", "cython", "compiled"):
    try:
        from . import _fast as _impl
    except ImportError:
        if _CHOICE not in ("auto", ""):
            raise ImportError(
                "ENTROKIT_BACKEND requested the compiled kernels but the "
                "extension is not built; run `pip install -e . --no-build-isolation`"
            )
        _impl = _ref
elif _CHOICE in ("py", "python", "pure", "numpy"):
    _impl = _ref
else:
    raise ImportError(f"unknown ENTROKIT_BACKEND value: {_CHOICE!r}")

BACKEND = _impl.BACKEND

ordinal_encode = _impl.ordinal_encode
ordinal_encode_rows = _impl.ordinal_encode_rows
inversion_encode = _impl.inversion_encode
inversion_encode_rows = _impl.inversion_encode_rows
lz76_phrase_count = _impl.lz76_phrase_count


def available_backends():
    """Names of the kernel backends importable in this installation."""
    names = ["python"]
    try:
        from . import _fast  # noqa: F401
        names.insert(0, "cython")
    except ImportError:
        pass
    return names
