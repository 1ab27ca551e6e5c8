"""Build script: compiles the optional fast hole-search kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so any failure here downgrades to a warning.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/holelab/kernels/_fastcore.pyx"],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    import warnings

    warnings.warn(f"fast kernel not built, falling back to pure Python: {exc}")

setup(ext_modules=ext_modules)
