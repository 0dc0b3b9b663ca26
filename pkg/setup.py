"""Build script: compiles the optional query-kernel extension.

Set RSDICT_NO_EXT=1 to skip the extension entirely; the package then runs on
the pure-Python kernel backend.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("RSDICT_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "rsdict._kernels_cy",
                    ["src/rsdict/_kernels_cy.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "initializedcheck": False,
            },
        )

setup(ext_modules=ext_modules)
