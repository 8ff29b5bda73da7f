"""Build script for the optional compiled Faddeeva kernel.

The package is fully functional without the extension (a vectorized numpy
fallback is selected at import time); building it just makes the hot
kernels faster.  Build in place with:

    python setup.py build_ext --inplace
"""
import numpy
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = []
if cythonize is not None:
    extensions = cythonize(
        [
            Extension(
                "forerunners._wofz",
                ["src/forerunners/_wofz.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
