"""Build script: compiles the optional Cython orbit kernel.

The package works without the extension (a pure-Python kernel is selected
at import time), so any build failure here downgrades to a warning.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/vogankm/_orbitcore.pyx"],
        language_level=3,
        compiler_directives={"boundscheck": False, "wraparound": False},
    )
except Exception as exc:  # noqa: BLE001 - extension is optional
    sys.stderr.write(f"vogankm: skipping Cython kernel build ({exc!r})\n")

setup(ext_modules=ext_modules)
