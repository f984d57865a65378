"""Build script for the optional compiled kernels.

The package works without the extension: resurgence._kernels falls back to a
numpy implementation with identical (bit-for-bit) semantics. The extension is
only a fast path for the Monte Carlo, epidemic-oracle and raster hot loops.
"""

from setuptools import Extension, setup


def extensions():
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "resurgence._kernels._core",
        ["src/resurgence/_kernels/_core.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=extensions())
