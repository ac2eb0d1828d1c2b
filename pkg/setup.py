"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so a missing
Cython or C compiler only costs speed, not correctness.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CRANKTAB_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("cranktab._ckernels", ["src/cranktab/_ckernels.pyx"])],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
