"""Build script: compiles the optional C kernel extension when Cython is present.

The package works without the extension (a pure-Python backend is selected at
import time), so a failed extension build should not block installation.
"""
from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "aperylike.kernels._ckernels",
                ["src/aperylike/kernels/_ckernels.pyx"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
