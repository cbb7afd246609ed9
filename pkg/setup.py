import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("QUASICLIQUE_PURE", "") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "quasiclique._kernels._native",
                    ["src/quasiclique/_kernels/_native.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "cdivision": True,
                "initializedcheck": False,
            },
        )
    except ImportError:
        # No Cython at build time: install the pure-Python fallback only.
        ext_modules = []

setup(ext_modules=ext_modules)
