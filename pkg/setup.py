import os
from setuptools import setup

# The compiled kernel is optional: the package runs on pure Python whenever
# the extension is absent (gl2trace.kernels falls back at import time).
# Set GL2TRACE_BUILD_EXT=0 to skip the build explicitly.

ext_modules = []
if os.environ.get("GL2TRACE_BUILD_EXT", "1") != "0":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "gl2trace._speedups",
                    ["src/gl2trace/_speedups.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
