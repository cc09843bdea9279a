"""Build script for the optional compiled kernels.

The package works without the extension (a pure-Python fallback is
selected at import time), so a failed compilation only costs speed.
"""

import numpy as np
from Cython.Build import cythonize
from setuptools import Extension, setup

extensions = cythonize(
    [
        Extension(
            "marginal_choice.kernels._fast",
            ["src/marginal_choice/kernels/_fast.pyx"],
            include_dirs=[np.get_include()],
            define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        )
    ],
    language_level=3,
)

setup(ext_modules=extensions)
