"""Build script: compiles the optional Cython kernel.

The package works without the extension (a NumPy fallback is selected at
import time), so any build failure here is non-fatal: we simply ship the
pure-Python wheel.  -ffp-contract=off keeps the compiled kernel bit-identical
to the NumPy path (no FMA contraction of a*b + c*d).
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "qmtsec._core",
                ["src/qmtsec/_core.pyx"],
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception:
    ext_modules = []

setup(ext_modules=ext_modules)
