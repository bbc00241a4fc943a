"""Build hook for the optional compiled kernel extension.

The package is fully functional without the extension; a failed compile
falls back to the pure Python kernels at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "coverlab.kernels._fastcore",
                ["src/coverlab/kernels/_fastcore.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
