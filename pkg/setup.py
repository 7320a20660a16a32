"""Builds the optional compiled convolution core.

The package works without it: ``dssl.kernels`` falls back to a pure-numpy
implementation when the extension is missing or fails to build.
"""

from setuptools import Extension, setup

try:
    import numpy
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "dssl.kernels._conv_cy",
                sources=["src/dssl/kernels/_conv_cy.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )

setup(ext_modules=ext_modules)
