"""Build script: compiles the optional row-reduction kernel extension.

If Cython (or a C compiler) is unavailable the install still succeeds;
the package then falls back to the pure-Python kernels at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "sidoncodes._fastops",
                ["src/sidoncodes/_fastops.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
