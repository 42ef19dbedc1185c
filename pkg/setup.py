"""Build script: compiles the optional accelerator extension.

The package is fully functional without the extension (a pure-Python
kernel is selected at import time), so any failure here should not block
installation.  Set SPARSEPOLY_NO_EXT=1 to skip the compile step entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SPARSEPOLY_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("sparsepoly._kernel_c", ["src/sparsepoly/_kernel_c.pyx"])],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
