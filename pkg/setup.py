"""Build script: compiles the optional fast kernel extension.

The package is fully functional without the extension (a numpy reference
backend is selected at import time), so a missing compiler or Cython must
not break installation.
"""
import sys

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "percwit._core._fastcore",
                ["src/percwit/_core/_fastcore.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # no Cython / no toolchain: pure install
    print(f"skipping compiled kernels ({exc}); using the numpy backend",
          file=sys.stderr)

setup(ext_modules=ext_modules)
