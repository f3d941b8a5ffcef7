"""Build script: compiles the optional Cython kernel extension.

The package is fully functional without the extension (a NumPy fallback is
selected at import time), so any failure to build it is demoted to a warning.
"""

import sys

from setuptools import setup
from setuptools.extension import Extension


def _extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError as exc:
        sys.stderr.write(f"warning: Cython/NumPy unavailable ({exc}); "
                         "building without the compiled kernels\n")
        return []
    ext = Extension(
        "casimir_pws._kernels",
        sources=["src/casimir_pws/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=_extensions())
