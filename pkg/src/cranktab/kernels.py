"""Kernel backend selection.

Imports the compiled Cython kernels when the extension is available and falls
back to the pure-Python reference implementation otherwise.  Set the
environment variable ``CRANKTAB_KERNELS`` to ``python`` or ``c`` before import
to force a backend (forcing ``c`` raises if the extension was not built).
"""

import os

_FORCE = os.environ.get("CRANKTAB_KERNELS", "").strip().lower()

if _FORCE in ("python", "py", "pure"):
    from cranktab import _kernels_py as _impl

    BACKEND = "python"
elif _FORCE in ("c", "compiled", "cython"):
    from cranktab import _ckernels as _impl  # type: ignore[no-redef]

    BACKEND = "c"
else:
    try:
        from cranktab import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "c"
    except ImportError:
        from cranktab import _kernels_py as _impl

        BACKEND = "python"

cauchy_mul = _impl.cauchy_mul
geom_fold = _impl.geom_fold
zfree_mul = _impl.zfree_mul


def backend() -> str:
    """Name of the active kernel backend: ``"c"`` or ``"python"``."""
    return BACKEND
