"""Builds the optional Cython search kernel; the package works without it."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("SUBCUBIC_PACKING_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("subcubic_packing._ckernels", ["src/subcubic_packing/_ckernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
