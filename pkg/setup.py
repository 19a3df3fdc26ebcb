"""Build script: compiles the optional fast counting kernels.

The package is fully functional without the extension (a pure-Python twin of
every kernel is selected at import time); the extension just makes the hot
counting loops much faster.  Build in place with:

    python setup.py build_ext --inplace
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "addcomb._kernels_cy",
                ["src/addcomb/_kernels_cy.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython available: install pure-Python only.
    pass

setup(ext_modules=ext_modules)
