"""Build script for the compiled scan kernel.

The extension is optional: if Cython or a C compiler is unavailable the
package installs anyway and falls back to the numpy kernel at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "graph2ham._kernels._fast",
                ["src/graph2ham/_kernels/_fast.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
