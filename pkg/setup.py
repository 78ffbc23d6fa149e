"""Build script: compiles the finite-field counting kernel when Cython and a
C compiler are available.  The package falls back to the pure-Python kernel
at import time if the extension is missing, so the build is allowed to fail.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "clusterchar._countcore",
                ["src/clusterchar/_countcore.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
