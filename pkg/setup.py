"""Build script: compiles the optional exact-elimination kernels.

The package is fully functional without the extension (a pure-Python
fallback with the identical interface is selected at import time).
Set SYMIDEAL_NO_EXT=1 to skip compilation entirely.
"""

import os

from setuptools import setup

ext_modules = []
if os.environ.get("SYMIDEAL_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/symideal/_kernels.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
