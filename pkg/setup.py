"""Build script: compiles the optional accelerator extension.

The package works without the extension (a pure-Python fallback is selected
at import time); set CRSEMIGROUPS_NO_EXT=1 to skip the build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CRSEMIGROUPS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "crsemigroups._kernels",
                    ["src/crsemigroups/_kernels.pyx"],
                    optional=True,
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
