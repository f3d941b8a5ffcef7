"""Select the kernel backend: compiled extension if available, NumPy otherwise.

The compiled module ``casimir_pws._kernels`` is optional — source installs
without a C toolchain fall back to the pure-NumPy implementation with
identical semantics.  Set ``CASIMIR_PWS_BACKEND=python`` to force the
fallback (used by the benchmark and by tests that compare the two).
"""

import os

__all__ = ["kernels", "BACKEND_NAME"]

_FORCED = os.environ.get("CASIMIR_PWS_BACKEND", "").strip().lower()

if _FORCED in ("python", "numpy"):
    from . import _kernels_np as kernels
elif _FORCED in ("", "auto", "c", "cython", "compiled"):
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_np as kernels
else:
    raise RuntimeError(
        f"unrecognized CASIMIR_PWS_BACKEND={_FORCED!r}; "
        "expected 'python', 'cython', or 'auto'"
    )

BACKEND_NAME = kernels.BACKEND_NAME
