import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("SFNFA_PURE") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("sfnfa._kernel._speed", ["src/sfnfa/_kernel/_speed.pyx"])],
            language_level=3,
        )
    except ImportError:
        # No Cython: install pure-Python only, the kernel falls back at import.
        ext_modules = []

setup(ext_modules=ext_modules)
