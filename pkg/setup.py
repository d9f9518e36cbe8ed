import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "rignls._kernels._core",
                ["src/rignls/_kernels/_core.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython available: install pure-Python only, kernels fall back at import.
    ext_modules = []

setup(ext_modules=ext_modules)
