"""Build script for the optional compiled kernels.

Without Cython (or a C compiler) the package installs pure Python and the
kernels fall back to ``dolbeault._kernels._pykernels``.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("DOLBEAULT_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("dolbeault._kernels._ckernels",
                       ["src/dolbeault/_kernels/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
