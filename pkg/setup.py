"""Builds the optional compiled kernel.

The package is fully functional without it (``biloc._kernel_py`` is the
fallback); the extension just makes the exhaustive sweeps much faster.
If Cython or a C compiler is unavailable the build silently degrades to
pure Python.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/biloc/_speedups.pyx"],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-env dependent
    print(f"biloc: building without compiled kernels ({exc})")

setup(ext_modules=ext_modules)
