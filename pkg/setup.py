"""Build the optional Cython kernels; the package falls back to numpy without them.

    python setup.py build_ext --inplace
"""
import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure install
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension(
            "bestmoebius._kernels",
            ["src/bestmoebius/_kernels.pyx"],
            include_dirs=[np.get_include()],
            extra_compile_args=["-O3"],
            optional=True,
        )],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
